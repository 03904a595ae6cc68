#include "cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace charposet {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const int dd = static_cast<int>(den.size()) - 1;
  const int top = static_cast<int>(num.size()) - 1;
  if (top < dd) return {0};
  std::vector<std::int64_t> quot(top - dd + 1, 0);
  for (int j = top; j >= dd; --j) {
    const std::int64_t c = num[j];
    if (c == 0) continue;
    quot[j - dd] = c;
    for (int i = 0; i <= dd; ++i) num[j - dd + i] -= c * den[i];
  }
  for (int i = 0; i < dd; ++i) {
    if (num[i] != 0) throw Error(ErrorCode::NotDivisible, "polynomial division left a remainder");
  }
  return quot;
}

std::unique_ptr<CyclotomicField> make_field(int n) {
  auto f = std::make_unique<CyclotomicField>();
  f->n = n;
  f->modulus = cyclotomic_polynomial(n);
  f->phi = static_cast<int>(f->modulus.size()) - 1;
  f->zeta_powers.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<std::int64_t> poly(std::max(k + 1, f->phi), 0);
    poly[k] = 1;
    f->reduce(poly);
    poly.resize(f->phi);
    f->zeta_powers.push_back(std::move(poly));
  }
  return f;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

void CyclotomicField::reduce(std::span<std::int64_t> poly) const {
  for (std::size_t j = poly.size(); j-- > static_cast<std::size_t>(phi);) {
    const std::int64_t c = poly[j];
    if (c == 0) continue;
    poly[j] = 0;
    const std::size_t base = j - phi;
    for (int i = 0; i < phi; ++i) {
      if (modulus[i] != 0) poly[base + i] -= c * modulus[i];
    }
  }
}

const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  thread_local const CyclotomicField* last = nullptr;
  if (last != nullptr && last->n == n) return *last;
  if (n < 1) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = make_field(n);
  last = slot.get();
  return *slot;
}

CycInt::CycInt(int n, std::int64_t value) : n_(n) {
  coeffs_.assign(cyclotomic_field(n).phi, 0);
  coeffs_[0] = value;
}

CycInt::CycInt(int n, std::vector<std::int64_t> coeffs) : n_(n) {
  const auto& field = cyclotomic_field(n);
  if (coeffs.size() < static_cast<std::size_t>(field.phi)) coeffs.resize(field.phi, 0);
  field.reduce(coeffs);
  coeffs.resize(field.phi);
  coeffs_ = std::move(coeffs);
}

CycInt CycInt::zeta_pow(int n, std::int64_t k) {
  const auto& field = cyclotomic_field(n);
  const std::int64_t r = ((k % n) + n) % n;
  CycInt out(n, 0);
  out.coeffs_ = field.zeta_powers[r];
  return out;
}

bool CycInt::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::int64_t CycInt::as_integer() const {
  if (!is_integer()) throw Error(ErrorCode::NotRationalInteger, to_string());
  return coeffs_[0];
}

CycInt CycInt::exact_div(std::int64_t m) const {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "divisor must be positive");
  CycInt out = *this;
  for (auto& c : out.coeffs_) {
    if (c % m != 0) {
      throw Error(ErrorCode::NotDivisible, to_string() + " / " + std::to_string(m));
    }
    c /= m;
  }
  return out;
}

CycInt CycInt::conjugate() const {
  const auto& field = cyclotomic_field(n_);
  std::vector<std::int64_t> out(field.phi, 0);
  for (int i = 0; i < field.phi; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& z = field.zeta_powers[(n_ - i) % n_];
    for (int j = 0; j < field.phi; ++j) out[j] += coeffs_[i] * z[j];
  }
  CycInt result(n_, 0);
  result.coeffs_ = std::move(out);
  return result;
}

void CycInt::require_same(const CycInt& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorCode::ConductorMismatch,
                std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
  require_same(other);
  const auto& field = cyclotomic_field(n_);
  std::vector<std::int64_t> acc(2 * field.phi - 1, 0);
  accumulate_product(acc, *this, other, 1);
  field.reduce(acc);
  acc.resize(field.phi);
  coeffs_ = std::move(acc);
  return *this;
}

CycInt& CycInt::scale(std::int64_t m) {
  for (auto& c : coeffs_) c *= m;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  return out.scale(-1);
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void accumulate_product(std::span<std::int64_t> acc, const CycInt& a, const CycInt& b,
                        std::int64_t scale) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    const std::int64_t s = ca[i] * scale;
    for (std::size_t j = 0; j < cb.size(); ++j) acc[i + j] += s * cb[j];
  }
}

}  // namespace charposet
