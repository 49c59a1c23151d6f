#include "rootkit/rational.hpp"

#include <functional>
#include <sstream>

#include "rootkit/error.hpp"

namespace rootkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InadmissibleRank: return "InadmissibleRank";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotPositiveRoot: return "NotPositiveRoot";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::NotLong: return "NotLong";
    case ErrorCode::MultiplicityZero: return "MultiplicityZero";
    case ErrorCode::NeitherSpecialNorCospecial: return "NeitherSpecialNorCospecial";
  }
  return "Unknown";
}

std::string to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
  };
  const auto is_int = [](std::string_view s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-') throw bad();
  mpz_class d(std::string(den), 10);
  if (d == 0) throw bad();
  Rational q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RatVector::RatVector(std::initializer_list<long> ints) {
  coords_.reserve(ints.size());
  for (long x : ints) coords_.emplace_back(x);
}

RatVector RatVector::unit(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v[i] = 1;
  return v;
}

bool RatVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

RatVector& RatVector::operator+=(const RatVector& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

RatVector& RatVector::add_scaled(const Rational& c, const RatVector& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += c * other.coords_[k];
  return *this;
}

RatVector operator-(RatVector a) {
  for (auto& x : a.coords_) x = -x;
  return a;
}

std::strong_ordering operator<=>(const RatVector& a, const RatVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const int c = cmp(a.coords_[k], b.coords_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string RatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ", ";
    os << coords_[k].get_str();
  }
  os << ')';
  return os.str();
}

std::vector<std::string> RatVector::to_pq_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(to_pq(c));
  return out;
}

RatVector RatVector::from_pq_strings(const std::vector<std::string>& parts) {
  std::vector<Rational> coords;
  coords.reserve(parts.size());
  for (const auto& p : parts) coords.push_back(parse_rational(p));
  return RatVector(std::move(coords));
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << v.to_string(); }

Rational dot(const RatVector& a, const RatVector& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  const std::size_t low = mpz_size(z) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z, 0));
  return low * 31 + static_cast<std::size_t>(mpz_sgn(z) + 1);
}

}  // namespace

std::size_t RatVectorHash::operator()(const RatVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& c : v) {
    h ^= hash_mpz(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_mpz(c.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace rootkit
