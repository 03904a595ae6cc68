#include "builtin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "error.hpp"

namespace charposet {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {Family::Cyclic, "Cyclic"},
    {Family::ElemAbelian, "ElemAbelian"},
    {Family::AbelianProduct, "AbelianProduct"},
    {Family::Dihedral, "Dihedral"},
    {Family::Quaternion, "Quaternion"},
    {Family::Semidihedral, "Semidihedral"},
    {Family::Modular, "Modular"},
    {Family::Extraspecial, "Extraspecial"},
    {Family::DirectProduct, "DirectProduct"},
};

const char* family_name(Family f) {
  for (const auto& n : kNames) {
    if (n.family == f) return n.name;
  }
  return "?";
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_power_of_two(long long m) { return m > 0 && (m & (m - 1)) == 0; }

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    r *= b;
    if (r > (1LL << 40)) return r;  // saturates well above any cap
  }
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  FamilySpec parse() {
    FamilySpec spec = spec_();
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "family spec '" + s_ + "' at offset " + std::to_string(i_) + ": " + what);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  FamilySpec spec_() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string word = s_.substr(start, i_ - start);
    if (word.empty()) fail("expected a family name");
    std::string lower = word;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    FamilySpec spec;
    bool known = false;
    for (const auto& n : kNames) {
      std::string cand = n.name;
      std::transform(cand.begin(), cand.end(), cand.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (cand == lower) {
        spec.family = n.family;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::UnknownFamily, word);
    if (!eat('(')) fail("expected '('");
    if (eat(')')) return spec;
    do {
      skip_ws();
      if (i_ >= s_.size()) fail("unterminated argument list");
      const char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        spec.factors.push_back(spec_());
      } else if ((c == '+' || c == '-') &&
                 (i_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
        spec.plus = c == '+';
        spec.params.push_back(c == '+' ? 1 : -1);
        ++i_;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          v = v * 10 + (s_[i_] - '0');
          if (v > 1000000000) fail("number too large");
          ++i_;
        }
        spec.params.push_back(v);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    } while (eat(','));
    if (!eat(')')) fail("expected ')'");
    return spec;
  }

  std::string s_;
  std::size_t i_ = 0;
};

void check_spec(const FamilySpec& s) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidInput, s.to_string() + ": " + why);
  };
  const auto& p = s.params;
  switch (s.family) {
    case Family::Cyclic:
      if (p.size() != 2 || !s.factors.empty()) bad("expects (p, n)");
      if (!is_prime(p[0])) bad("p must be prime");
      break;
    case Family::ElemAbelian:
      if (p.size() != 2 || !s.factors.empty()) bad("expects (p, n)");
      if (!is_prime(p[0])) bad("p must be prime");
      if (p[1] < 1) bad("n must be at least 1");
      break;
    case Family::AbelianProduct:
      if (p.empty() || !s.factors.empty()) bad("expects a list of cyclic orders");
      for (auto d : p) {
        if (d < 1) bad("cyclic orders must be positive");
      }
      break;
    case Family::Dihedral:
      if (p.size() != 1 || !is_power_of_two(p[0]) || p[0] < 4) bad("order must be 2^n >= 4");
      break;
    case Family::Quaternion:
      if (p.size() != 1 || !is_power_of_two(p[0]) || p[0] < 8) bad("order must be 2^n >= 8");
      break;
    case Family::Semidihedral:
      if (p.size() != 1 || !is_power_of_two(p[0]) || p[0] < 16) bad("order must be 2^n >= 16");
      break;
    case Family::Modular:
      if (p.size() != 2 || !is_prime(p[0])) bad("expects (p, n) with p prime");
      if (p[1] < (p[0] == 2 ? 4 : 3)) bad("needs n >= 4 for p = 2 and n >= 3 otherwise");
      break;
    case Family::Extraspecial:
      if (p.size() != 2 || !is_prime(p[0]) || (p[1] != 1 && p[1] != -1)) {
        bad("expects (p, +) or (p, -)");
      }
      break;
    case Family::DirectProduct:
      if (!p.empty() || s.factors.size() != 2) bad("expects two group specs");
      break;
  }
}

// a^i b^j with a^m = 1, b^k = a^s, b a b^-1 = a^r; index i + m*j.
GroupTable metacyclic(int m, int k, int r, int s, std::string name) {
  std::vector<int> rpow(k + 1, 1 % m);
  for (int j = 1; j <= k; ++j) rpow[j] = static_cast<int>((1LL * rpow[j - 1] * r) % m);
  const int n = m * k;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const int i = x % m;
    const int j = x / m;
    for (int y = 0; y < n; ++y) {
      const int i2 = y % m;
      const int j2 = y / m;
      long long a = i + 1LL * rpow[j] * i2;
      int b = j + j2;
      if (b >= k) {
        b -= k;
        a += s;
      }
      table[x][y] = static_cast<int>(((a % m) + m) % m) + m * b;
    }
  }
  return GroupTable::from_cayley(table, std::move(name));
}

GroupTable heisenberg(int p, std::string name) {
  // (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y')
  const int n = p * p * p;
  auto idx = [p](int x, int y, int z) { return x + p * (y + p * z); };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const int x = a % p, y = (a / p) % p, z = a / (p * p);
    for (int b = 0; b < n; ++b) {
      const int x2 = b % p, y2 = (b / p) % p, z2 = b / (p * p);
      table[a][b] = idx((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
    }
  }
  return GroupTable::from_cayley(table, std::move(name));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name) {
  const int na = a.order();
  const int nb = b.order();
  // relabel so that both identities sit at index 0
  auto shift = [](const GroupTable& g, int x) {
    return x == 0 ? g.identity() : (x == g.identity() ? 0 : x);
  };
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    const int xa = shift(a, x / nb), xb = shift(b, x % nb);
    for (int y = 0; y < na * nb; ++y) {
      const int ya = shift(a, y / nb), yb = shift(b, y % nb);
      table[x][y] = shift(a, a.mul(xa, ya)) * nb + shift(b, b.mul(xb, yb));
    }
  }
  return GroupTable::from_cayley(table, std::move(name));
}

GroupTable build(const FamilySpec& s) {
  const auto& p = s.params;
  const std::string name = s.to_string();
  switch (s.family) {
    case Family::Cyclic:
      return metacyclic(static_cast<int>(ipow(p[0], p[1])), 1, 1, 0, name);
    case Family::ElemAbelian:
    case Family::AbelianProduct: {
      std::vector<long long> orders =
          s.family == Family::AbelianProduct ? p : std::vector<long long>(p[1], p[0]);
      GroupTable g = metacyclic(static_cast<int>(orders[0]), 1, 1, 0, name);
      for (std::size_t i = 1; i < orders.size(); ++i) {
        g = direct_product(g, metacyclic(static_cast<int>(orders[i]), 1, 1, 0, ""), name);
      }
      return g;
    }
    case Family::Dihedral: {
      const int m = static_cast<int>(p[0] / 2);
      return metacyclic(m, 2, m - 1, 0, name);
    }
    case Family::Quaternion: {
      const int m = static_cast<int>(p[0] / 2);
      return metacyclic(m, 2, m - 1, m / 2, name);
    }
    case Family::Semidihedral: {
      const int m = static_cast<int>(p[0] / 2);
      return metacyclic(m, 2, m / 2 - 1, 0, name);
    }
    case Family::Modular: {
      const int q = static_cast<int>(p[0]);
      const int m = static_cast<int>(ipow(q, p[1] - 1));
      return metacyclic(m, q, 1 + m / q, 0, name);
    }
    case Family::Extraspecial: {
      const int q = static_cast<int>(p[0]);
      if (q == 2) return s.plus ? metacyclic(4, 2, 3, 0, name) : metacyclic(4, 2, 3, 2, name);
      if (s.plus) return heisenberg(q, name);
      return metacyclic(q * q, q, 1 + q, 0, name);
    }
    case Family::DirectProduct:
      return direct_product(build(s.factors[0]), build(s.factors[1]), name);
  }
  throw Error(ErrorCode::UnknownFamily, name);
}

void check_tree(const FamilySpec& s) {
  check_spec(s);
  for (const auto& f : s.factors) check_tree(f);
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string out = family_name(family);
  out += "(";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ",";
    first = false;
  };
  if (family == Family::Extraspecial && params.size() == 2) {
    sep();
    out += std::to_string(params[0]);
    sep();
    out += plus ? "+" : "-";
  } else {
    for (auto v : params) {
      sep();
      out += std::to_string(v);
    }
  }
  for (const auto& f : factors) {
    sep();
    out += f.to_string();
  }
  return out + ")";
}

long long FamilySpec::order() const {
  switch (family) {
    case Family::Cyclic:
    case Family::ElemAbelian:
    case Family::Modular:
      return ipow(params[0], params[1]);
    case Family::AbelianProduct: {
      long long r = 1;
      for (auto d : params) r = std::min(r * d, 1LL << 40);
      return r;
    }
    case Family::Dihedral:
    case Family::Quaternion:
    case Family::Semidihedral:
      return params[0];
    case Family::Extraspecial:
      return ipow(params[0], 3);
    case Family::DirectProduct:
      return std::min(factors[0].order() * factors[1].order(), 1LL << 40);
  }
  return 0;
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec = Parser(text).parse();
  check_tree(spec);
  return spec;
}

GroupTable builtin(const FamilySpec& spec, const Limits& limits) {
  check_tree(spec);
  const long long order = spec.order();
  if (order > limits.closure_cap) {
    throw Error(ErrorCode::OrderCapExceeded, spec.to_string() + " has order " +
                                                 std::to_string(order) + " > cap " +
                                                 std::to_string(limits.closure_cap));
  }
  return build(spec);
}

GroupTable builtin(const std::string& text, const Limits& limits) {
  return builtin(parse_family_spec(text), limits);
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"Cyclic", "(p, n)", "p prime, n >= 0; order p^n", "Cyclic(2,3)"},
      {"ElemAbelian", "(p, n)", "p prime, n >= 1; order p^n", "ElemAbelian(2,3)"},
      {"AbelianProduct", "(d1, ..., dk)", "positive cyclic orders", "AbelianProduct(4,2)"},
      {"Dihedral", "(2^n)", "order 2^n >= 4", "Dihedral(8)"},
      {"Quaternion", "(2^n)", "order 2^n >= 8", "Quaternion(8)"},
      {"Semidihedral", "(2^n)", "order 2^n >= 16", "Semidihedral(16)"},
      {"Modular", "(p, n)", "order p^n; n >= 4 for p = 2, n >= 3 for odd p", "Modular(2,4)"},
      {"Extraspecial", "(p, +|-)", "order p^3", "Extraspecial(3,+)"},
      {"DirectProduct", "(spec, spec)", "order = product of factor orders",
       "DirectProduct(Quaternion(8),Cyclic(2,1))"},
  };
  return catalog;
}

std::vector<std::string> default_sweep_specs() {
  std::vector<std::string> specs;
  // p = 2
  for (int n = 1; n <= 6; ++n) specs.push_back("Cyclic(2," + std::to_string(n) + ")");
  for (int n = 2; n <= 6; ++n) specs.push_back("ElemAbelian(2," + std::to_string(n) + ")");
  for (const char* s : {"4,2", "8,2", "4,4", "4,2,2", "16,2", "8,4", "8,2,2", "4,4,2", "4,2,2,2",
                        "32,2", "16,4", "8,8", "16,2,2", "8,4,2", "4,4,4", "8,2,2,2", "4,4,2,2",
                        "4,2,2,2,2"}) {
    specs.push_back(std::string("AbelianProduct(") + s + ")");
  }
  for (int m : {8, 16, 32, 64}) {
    specs.push_back("Dihedral(" + std::to_string(m) + ")");
    specs.push_back("Quaternion(" + std::to_string(m) + ")");
  }
  for (int m : {16, 32, 64}) specs.push_back("Semidihedral(" + std::to_string(m) + ")");
  for (int n : {4, 5, 6}) specs.push_back("Modular(2," + std::to_string(n) + ")");
  specs.push_back("Extraspecial(2,+)");
  specs.push_back("Extraspecial(2,-)");
  for (const char* s :
       {"DirectProduct(Dihedral(8),Cyclic(2,1))", "DirectProduct(Quaternion(8),Cyclic(2,1))",
        "DirectProduct(Dihedral(8),Cyclic(2,2))", "DirectProduct(Quaternion(8),Cyclic(2,2))",
        "DirectProduct(Dihedral(8),ElemAbelian(2,2))",
        "DirectProduct(Quaternion(8),ElemAbelian(2,2))", "DirectProduct(Dihedral(16),Cyclic(2,1))",
        "DirectProduct(Quaternion(16),Cyclic(2,1))", "DirectProduct(Semidihedral(16),Cyclic(2,1))",
        "DirectProduct(Modular(2,4),Cyclic(2,1))", "DirectProduct(Dihedral(8),Dihedral(8))",
        "DirectProduct(Dihedral(8),Quaternion(8))", "DirectProduct(Quaternion(8),Quaternion(8))"}) {
    specs.push_back(s);
  }
  // p = 3
  for (int n = 1; n <= 4; ++n) specs.push_back("Cyclic(3," + std::to_string(n) + ")");
  for (int n = 2; n <= 4; ++n) specs.push_back("ElemAbelian(3," + std::to_string(n) + ")");
  for (const char* s : {"9,3", "27,3", "9,9", "9,3,3"}) {
    specs.push_back(std::string("AbelianProduct(") + s + ")");
  }
  specs.push_back("Extraspecial(3,+)");
  specs.push_back("Extraspecial(3,-)");
  specs.push_back("Modular(3,4)");
  specs.push_back("DirectProduct(Extraspecial(3,+),Cyclic(3,1))");
  specs.push_back("DirectProduct(Extraspecial(3,-),Cyclic(3,1))");
  // p = 5
  specs.push_back("Cyclic(5,1)");
  specs.push_back("Cyclic(5,2)");
  specs.push_back("ElemAbelian(5,2)");
  return specs;
}

}  // namespace charposet
