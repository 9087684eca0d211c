#include "okbody/rootsys.hpp"

#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace okbody {

namespace {

std::vector<std::vector<int>> zero_matrix(int r) { return std::vector<std::vector<int>>(r, std::vector<int>(r, 0)); }

std::vector<std::vector<int>> chain(int r) {
  auto a = zero_matrix(r);
  for (int i = 0; i < r; ++i) {
    a[i][i] = 2;
    if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

// Positive roots of the root system with the given Cartan matrix, in root coordinates.
std::vector<std::vector<int>> positive_roots_of(const std::vector<std::vector<int>>& a) {
  const int r = static_cast<int>(a.size());
  auto pairing = [&](const std::vector<int>& beta, int i) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += beta[j] * a[i][j];
    return s;
  };
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer, all;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < r; ++i) {
        // p = how far down the alpha_i string through beta goes.
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        const int q = p - pairing(beta, i);
        if (q <= 0) continue;
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> matrix, std::string name)
    : a_(std::move(matrix)), name_(std::move(name)) {
  validate();
  enumerate_positive_roots();
}

void CartanDatum::validate() const {
  const size_t r = a_.size();
  require(r > 0, ErrorCode::InvalidInput, "Cartan matrix must have positive rank");
  for (size_t i = 0; i < r; ++i) {
    require(a_[i].size() == r, ErrorCode::InvalidInput, "Cartan matrix must be square");
    require(a_[i][i] == 2, ErrorCode::InvalidInput, "Cartan matrix diagonal entries must be 2");
    for (size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      require(a_[i][j] <= 0, ErrorCode::InvalidInput, "Cartan matrix off-diagonal entries must be <= 0");
      require((a_[i][j] == 0) == (a_[j][i] == 0), ErrorCode::InvalidInput,
              "Cartan matrix zero pattern must be symmetric");
    }
  }
  QMat q(r, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) q[i][j] = a_[i][j];
  require(determinant(q) > 0, ErrorCode::InvalidInput, "Cartan matrix is not of finite type");
}

void CartanDatum::enumerate_positive_roots() {
  positive_ = positive_roots_of(a_);
  require(positive_.size() <= 200, ErrorCode::InvalidInput, "root system too large or not of finite type");
}

CartanDatum CartanDatum::type_A(int r) {
  require(r >= 1, ErrorCode::InvalidInput, "A_r needs r >= 1");
  return CartanDatum(chain(r), "A" + std::to_string(r));
}

CartanDatum CartanDatum::type_B(int r) {
  require(r >= 2, ErrorCode::InvalidInput, "B_r needs r >= 2");
  auto a = chain(r);
  a[r - 1][r - 2] = -2;
  return CartanDatum(a, "B" + std::to_string(r));
}

CartanDatum CartanDatum::type_C(int r) {
  require(r >= 2, ErrorCode::InvalidInput, "C_r needs r >= 2");
  auto a = chain(r);
  a[r - 2][r - 1] = -2;
  return CartanDatum(a, "C" + std::to_string(r));
}

CartanDatum CartanDatum::type_D(int r) {
  require(r >= 3, ErrorCode::InvalidInput, "D_r needs r >= 3");
  auto a = chain(r);
  a[r - 2][r - 1] = a[r - 1][r - 2] = 0;
  a[r - 3][r - 1] = a[r - 1][r - 3] = -1;
  return CartanDatum(a, "D" + std::to_string(r));
}

CartanDatum CartanDatum::type_G2() { return CartanDatum({{2, -1}, {-3, 2}}, "G2"); }

CartanDatum CartanDatum::parse(const std::string& text) {
  std::vector<std::vector<std::vector<int>>> blocks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    require(part.size() >= 2 && std::isalpha(static_cast<unsigned char>(part[0])), ErrorCode::InvalidInput,
            "bad Cartan type '" + text + "'");
    const std::string digits = part.substr(1);
    require(std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }),
            ErrorCode::InvalidInput, "bad Cartan type '" + text + "'");
    const int r = std::stoi(digits);
    switch (std::toupper(static_cast<unsigned char>(part[0]))) {
      case 'A': blocks.push_back(type_A(r).a_); break;
      case 'B': blocks.push_back(type_B(r).a_); break;
      case 'C': blocks.push_back(type_C(r).a_); break;
      case 'D': blocks.push_back(type_D(r).a_); break;
      case 'G':
        require(r == 2, ErrorCode::InvalidInput, "only G2 is supported among exceptional types");
        blocks.push_back(type_G2().a_);
        break;
      default: fail(ErrorCode::InvalidInput, "unknown Cartan type '" + part + "'");
    }
  }
  require(!blocks.empty(), ErrorCode::InvalidInput, "empty Cartan type");
  size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  auto a = zero_matrix(static_cast<int>(total));
  size_t off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return CartanDatum(a, text);
}

Weight CartanDatum::simple_root(int i) const {
  Weight w(a_.size());
  for (size_t k = 0; k < a_.size(); ++k) w[k] = a_[k][i];
  return w;
}

Weight CartanDatum::fundamental_weight(int i) const {
  Weight w(a_.size(), 0);
  w[i] = 1;
  return w;
}

Weight CartanDatum::root_to_weight(const std::vector<int>& beta) const {
  Weight w(a_.size(), 0);
  for (size_t k = 0; k < a_.size(); ++k)
    for (size_t j = 0; j < a_.size(); ++j) w[k] += static_cast<long long>(a_[k][j]) * beta[j];
  return w;
}

int CartanDatum::pairing(const std::vector<int>& beta, int i) const {
  int s = 0;
  for (size_t j = 0; j < a_.size(); ++j) s += beta[j] * a_[i][j];
  return s;
}

WeylWord WeylWord::tail(size_t from) const {
  return WeylWord{std::vector<int>(letters.begin() + static_cast<long>(from), letters.end())};
}

WeylWord WeylWord::head(size_t count) const {
  return WeylWord{std::vector<int>(letters.begin(), letters.begin() + static_cast<long>(count))};
}

std::string WeylWord::to_string() const {
  std::string s;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(letters[k]);
  }
  return s;
}

WeylWord WeylWord::parse(const std::string& text) {
  WeylWord w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }),
               part.end());
    if (part.empty()) continue;
    require(std::all_of(part.begin(), part.end(), [](unsigned char ch) { return std::isdigit(ch); }),
            ErrorCode::InvalidInput, "bad word letter '" + part + "'");
    w.letters.push_back(std::stoi(part));
  }
  return w;
}

Character Character::monomial(const Weight& w, long long mult) {
  Character c;
  c.add(w, mult);
  return c;
}

long long Character::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long long Character::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : terms_) d += m;
  return d;
}

bool Character::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

void Character::add(const Weight& w, long long mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(w, mult);
  if (inserted) return;
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a.terms_)
    for (const auto& [wb, mb] : b.terms_) {
      Weight w(wa.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out.add(w, ma * mb);
    }
  return out;
}

Character Character::shifted(const Weight& shift) const {
  Character out;
  for (const auto& [w, m] : terms_) {
    Weight v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[i] = w[i] + shift[i];
    out.terms_.emplace(std::move(v), m);
  }
  return out;
}

std::string Character::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << "e(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
  }
  return first ? "0" : os.str();
}

Weight simple_reflection(const CartanDatum& c, int i, const Weight& lambda) {
  require(i >= 0 && i < c.rank(), ErrorCode::InvalidInput, "simple reflection index out of range");
  require(static_cast<int>(lambda.size()) == c.rank(), ErrorCode::InvalidInput, "weight length differs from rank");
  Weight out = lambda;
  const long long n = lambda[i];
  for (int k = 0; k < c.rank(); ++k) out[k] -= n * c.cartan(k, i);
  return out;
}

bool is_reduced(const CartanDatum& c, const WeylWord& w) {
  const int r = c.rank();
  for (int letter : w.letters)
    require(letter >= 1 && letter <= r, ErrorCode::InvalidInput, "word letter out of range");
  for (size_t k = 0; k < w.size(); ++k) {
    std::vector<int> beta(r, 0);
    beta[w.index(k)] = 1;
    for (size_t j = k; j-- > 0;) {
      const int i = w.index(j);
      beta[i] -= c.pairing(beta, i);
    }
    if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) return false;
  }
  return true;
}

size_t weyl_group_order(const CartanDatum& c) {
  const Weight rho(c.rank(), 1);
  std::set<Weight> seen{rho};
  std::deque<Weight> queue{rho};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < c.rank(); ++i) {
      Weight v = simple_reflection(c, i, w);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen.size();
}

Character demazure_operator(const CartanDatum& c, int i, const Character& f) {
  require(i >= 0 && i < c.rank(), ErrorCode::InvalidInput, "Demazure index out of range");
  const Weight alpha = c.simple_root(i);
  // g = f - e^{-alpha} s_i f, then solve h - e^{-alpha} h = g along each alpha-string.
  Character g = f;
  for (const auto& [mu, m] : f.terms()) {
    Weight v = simple_reflection(c, i, mu);
    for (int k = 0; k < c.rank(); ++k) v[k] -= alpha[k];
    g.add(v, -m);
  }
  auto floor_half = [](long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
  std::map<Weight, std::map<long long, long long>> strings;
  for (const auto& [mu, m] : g.terms()) {
    const long long p = floor_half(mu[i]);
    Weight key = mu;
    for (int k = 0; k < c.rank(); ++k) key[k] -= p * alpha[k];
    strings[key][p] += m;
  }
  Character h;
  for (const auto& [key, line] : strings) {
    long long total = 0;
    for (const auto& [p, m] : line) total += m;
    if (total != 0) fail(ErrorCode::Internal, "Demazure division is not exact");
    // h(p) = sum_{q >= p} g(q); nonzero only between the extreme positions.
    long long acc = 0;
    const long long lo = line.begin()->first, hi = line.rbegin()->first;
    for (long long p = hi; p >= lo; --p) {
      auto it = line.find(p);
      if (it != line.end()) acc += it->second;
      if (acc == 0) continue;
      Weight w = key;
      for (int k = 0; k < c.rank(); ++k) w[k] += p * alpha[k];
      h.add(w, acc);
    }
  }
  return h;
}

Character bs_character(const CartanDatum& c, const WeylWord& w, const std::vector<long long>& m) {
  require(m.size() == w.size(), ErrorCode::InvalidInput, "class length differs from word length");
  Character ch = Character::monomial(Weight(c.rank(), 0));
  for (size_t k = w.size(); k-- > 0;) {
    Weight shift(c.rank(), 0);
    shift[w.index(k)] = m[k];
    ch = demazure_operator(c, w.index(k), ch.shifted(shift));
  }
  return ch;
}

Character demazure_character(const CartanDatum& c, const WeylWord& w, const Weight& lambda) {
  Character ch = Character::monomial(lambda);
  for (size_t k = w.size(); k-- > 0;) ch = demazure_operator(c, w.index(k), ch);
  return ch;
}

long long weyl_dimension(const CartanDatum& c, const Weight& lambda) {
  require(static_cast<int>(lambda.size()) == c.rank(), ErrorCode::InvalidInput, "weight length differs from rank");
  for (auto x : lambda) require(x >= 0, ErrorCode::InvalidInput, "Weyl dimension needs a dominant weight");
  // Coroots are the positive roots of the transposed Cartan matrix.
  std::vector<std::vector<int>> at(c.rank(), std::vector<int>(c.rank()));
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) at[i][j] = c.cartan(j, i);
  Q dim = 1;
  for (const auto& coroot : positive_roots_of(at)) {
    long long num = 0, den = 0;
    for (int i = 0; i < c.rank(); ++i) {
      num += coroot[i] * (lambda[i] + 1);
      den += coroot[i];
    }
    dim *= Q(Z(static_cast<long>(num)), Z(static_cast<long>(den)));
  }
  dim.canonicalize();
  require(dim.get_den() == 1, ErrorCode::Internal, "Weyl dimension is not an integer");
  return to_ll(dim.get_num());
}

std::vector<Q> weight_to_root_coords(const CartanDatum& c, const Weight& mu) {
  QMat a(c.rank(), QVec(c.rank()));
  QVec b(c.rank());
  for (int i = 0; i < c.rank(); ++i) {
    for (int j = 0; j < c.rank(); ++j) a[i][j] = c.cartan(i, j);
    b[i] = static_cast<long>(mu[i]);
  }
  auto x = solve(a, b, c.rank());
  require(x.has_value(), ErrorCode::Internal, "Cartan matrix is singular");
  return *x;
}

}  // namespace okbody
