#include "preproj/quiver.hpp"

#include <fstream>
#include <sstream>

#include "preproj/common.hpp"

namespace preproj::quiver {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows) : n_(num_vertices), arrows_(std::move(arrows)) {
  require(n_ >= 1, "Quiver: need at least one vertex");
  for (const auto& a : arrows_) {
    require(a.source >= 1 && a.source <= n_ && a.target >= 1 && a.target <= n_,
            "Quiver: arrow endpoint out of range");
    require(a.source != a.target, "Quiver: loops are not allowed");
  }
  // Kahn's algorithm
  std::vector<int> indeg(n_ + 1, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  require(seen == n_, "Quiver: oriented cycle");
}

int Quiver::arrows_from_to(int i, int j) const {
  int c = 0;
  for (const auto& a : arrows_)
    if (a.source == i && a.target == j) ++c;
  return c;
}

bool Quiver::is_dynkin() const {
  // Sylvester: all leading principal minors of the Cartan matrix positive.
  for (int k = 1; k <= n_; ++k) {
    IntMatrix c(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c(i, j) = (i == j ? 2 : 0) - adjacency(i + 1, j + 1);
    if (c.determinant() <= 0) return false;
  }
  return true;
}

Quiver Quiver::kronecker() { return Quiver(2, {{1, 2}, {1, 2}}); }
Quiver Quiver::a2() { return Quiver(2, {{1, 2}}); }
Quiver Quiver::fork() { return Quiver(3, {{1, 2}, {1, 3}}); }

DoubleQuiver::DoubleQuiver(const Quiver& q) : base_(q) {}

Arrow DoubleQuiver::arrow(std::size_t a) const {
  const std::size_t m = base_.num_arrows();
  require(a < 2 * m, "DoubleQuiver::arrow: index out of range");
  if (a < m) return base_.arrow(a);
  const Arrow& h = base_.arrow(a - m);
  return {h.target, h.source};
}

std::size_t DoubleQuiver::bar(std::size_t a) const {
  const std::size_t m = base_.num_arrows();
  require(a < 2 * m, "DoubleQuiver::bar: index out of range");
  return a < m ? a + m : a - m;
}

int DoubleQuiver::epsilon(std::size_t a) const { return a < base_.num_arrows() ? 1 : -1; }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  require(cols_ == o.rows_, "IntMatrix::operator*: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
  return r;
}

RootVec IntMatrix::operator*(const RootVec& v) const {
  require(v.size() == cols_, "IntMatrix::operator*: length mismatch");
  RootVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

long long IntMatrix::determinant() const {
  require(rows_ == cols_, "IntMatrix::determinant: square matrix required");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  std::vector<Integer> a(data_.begin(), data_.end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * static_cast<long long>(at(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

RootVec simple_root(const Quiver& q, int i) {
  require(i >= 1 && i <= q.num_vertices(), "simple_root: vertex out of range");
  RootVec r(q.num_vertices(), 0);
  r[i - 1] = 1;
  return r;
}

RootVec add(const RootVec& a, const RootVec& b) {
  require(a.size() == b.size(), "add: length mismatch");
  RootVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

RootVec scale(long long s, const RootVec& a) {
  RootVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

namespace {
void check_len(const Quiver& q, const RootVec& x) {
  require(x.size() == static_cast<std::size_t>(q.num_vertices()), "root vector length mismatch");
}
}  // namespace

long long euler_form_A(const Quiver& q, const RootVec& x, const RootVec& y) {
  check_len(q, x);
  check_len(q, y);
  long long r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
  for (const auto& h : q.arrows()) r -= x[h.source - 1] * y[h.target - 1];
  return r;
}

long long symmetric_form(const Quiver& q, const RootVec& x, const RootVec& y) {
  return euler_form_A(q, x, y) + euler_form_A(q, y, x);
}

long long euler_form_lambda(const Quiver& q, const RootVec& x, const RootVec& y) {
  return symmetric_form(q, x, y);
}

RootVec reflection(const Quiver& q, int i, const RootVec& x) {
  RootVec a = simple_root(q, i);
  return add(x, scale(-symmetric_form(q, x, a), a));
}

IntMatrix reflection_matrix(const Quiver& q, int i) {
  const int n = q.num_vertices();
  IntMatrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    RootVec col = reflection(q, i, simple_root(q, j));
    for (int r = 0; r < n; ++r) m(r, j - 1) = col[r];
  }
  return m;
}

IntMatrix weyl_word_matrix(const Quiver& q, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(q.num_vertices());
  for (int i : word) m = m * reflection_matrix(q, i);
  return m;
}

RootVec weyl_word_apply(const Quiver& q, const std::vector<int>& word, const RootVec& x) {
  check_len(q, x);
  return weyl_word_matrix(q, word) * x;
}

std::string OrderProbe::to_string() const {
  return order ? std::to_string(*order) : ">" + std::to_string(n_max);
}

OrderProbe weyl_order_probe(const Quiver& q, const std::vector<int>& word, int n_max) {
  require(n_max >= 1, "weyl_order_probe: n_max must be positive");
  const IntMatrix w = weyl_word_matrix(q, word);
  const IntMatrix id = IntMatrix::identity(q.num_vertices());
  IntMatrix p = w;
  for (int n = 1; n <= n_max; ++n) {
    if (p == id) return {n, n_max};
    p = p * w;
  }
  return {std::nullopt, n_max};
}

Quiver parse_quiver(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Arrow> arrows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::string where = "quiver file line " + std::to_string(lineno);
    if (key == "vertices") {
      require(n < 0, where + ": duplicate 'vertices'");
      require(static_cast<bool>(ls >> n), where + ": expected vertex count");
    } else if (key == "arrow") {
      require(n >= 0, where + ": 'arrow' before 'vertices'");
      Arrow a{};
      require(static_cast<bool>(ls >> a.source >> a.target), where + ": expected 'arrow <s> <t>'");
      arrows.push_back(a);
    } else {
      argument_error(where + ": unknown keyword '" + key + "'");
    }
    std::string extra;
    require(!(ls >> extra), where + ": trailing tokens");
  }
  require(n >= 1, "quiver file: missing 'vertices'");
  return Quiver(n, std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open quiver file: " + path);
  return parse_quiver(in);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  os << "vertices " << q.num_vertices() << '\n';
  for (const auto& a : q.arrows()) os << "arrow " << a.source << ' ' << a.target << '\n';
  return os.str();
}

}  // namespace preproj::quiver
