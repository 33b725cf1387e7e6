#include "hsca/multivector.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hsca {

int blade_grade(BladeMask blade) { return std::popcount(static_cast<unsigned>(blade)); }

int blade_product_sign(BladeMask a, BladeMask b) {
  // Transpositions needed to interleave the ascending lists A and B equal the
  // number of pairs (i in A, j in B) with i > j.
  int swaps = 0;
  unsigned rest = static_cast<unsigned>(a) >> 1;
  while (rest != 0) {
    swaps += std::popcount(rest & b);
    rest >>= 1;
  }
  // Each shared index contracts with e_i² = −1.
  swaps += std::popcount(static_cast<unsigned>(a & b));
  return (swaps % 2 == 0) ? 1 : -1;
}

int conjugation_sign(int grade) {
  return (grade * (grade + 1) / 2) % 2 == 0 ? 1 : -1;
}

namespace {
void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim) {
    throw std::invalid_argument("Multivector: dimension must be in [2, 8]");
  }
}
}  // namespace

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector::Multivector(int dim, BladeMask blade, ExactScalar coeff) : dim_(dim) {
  check_dim(dim);
  if (blade >= (1u << dim)) throw std::invalid_argument("Multivector: blade out of range");
  if (!coeff.is_zero()) terms_.emplace_back(blade, std::move(coeff));
}

Multivector Multivector::scalar(int dim, ExactScalar value) {
  return Multivector(dim, 0, std::move(value));
}

Multivector Multivector::basis_vector(int dim, int j) {
  if (j < 1 || j > dim) throw std::invalid_argument("Multivector: index out of range");
  return Multivector(dim, static_cast<BladeMask>(1u << (j - 1)), ExactScalar(1));
}

Multivector Multivector::from_vector(const std::vector<ExactScalar>& coords) {
  Multivector out(static_cast<int>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    out.add_term(static_cast<BladeMask>(1u << j), coords[j]);
  }
  return out;
}

ExactScalar Multivector::coefficient(BladeMask blade) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), blade,
      [](const auto& term, BladeMask m) { return term.first < m; });
  if (it != terms_.end() && it->first == blade) return it->second;
  return ExactScalar();
}

void Multivector::add_term(BladeMask blade, const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), blade,
      [](const auto& term, BladeMask m) { return term.first < m; });
  if (it != terms_.end() && it->first == blade) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {blade, coeff});
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
  for (const auto& [blade, coeff] : o.terms_) add_term(blade, coeff);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
  for (const auto& [blade, coeff] : o.terms_) add_term(blade, -coeff);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  out.terms_.reserve(terms_.size());
  for (const auto& [blade, coeff] : terms_) out.terms_.emplace_back(blade, -coeff);
  return out;
}

Multivector Multivector::scaled(const ExactScalar& s) const {
  Multivector out(dim_);
  if (s.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [blade, coeff] : terms_) {
    ExactScalar c = coeff * s;
    if (!c.is_zero()) out.terms_.emplace_back(blade, std::move(c));
  }
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

bool Multivector::is_homogeneous_grade(int grade) const {
  return std::all_of(terms_.begin(), terms_.end(), [grade](const auto& term) {
    return blade_grade(term.first) == grade;
  });
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Multivector: dimension mismatch");
  Multivector out(a.dim());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      ExactScalar c = ca * cb;
      if (blade_product_sign(ba, bb) < 0) c = -c;
      out.add_term(static_cast<BladeMask>(ba ^ bb), c);
    }
  }
  return out;
}

Multivector clifford_conjugate(const Multivector& a) {
  Multivector out(a.dim());
  for (const auto& [blade, coeff] : a.terms()) {
    out.add_term(blade, conjugation_sign(blade_grade(blade)) < 0 ? -coeff : coeff);
  }
  return out;
}

Multivector grade_project(const Multivector& a, int grade) {
  if (grade < 0 || grade > a.dim()) {
    throw std::invalid_argument("grade_project: grade out of range");
  }
  Multivector out(a.dim());
  for (const auto& [blade, coeff] : a.terms()) {
    if (blade_grade(blade) == grade) out.add_term(blade, coeff);
  }
  return out;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [blade, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff.to_string() << ")";
    if (blade != 0) {
      os << "*e{";
      bool inner = true;
      for (int j = 0; j < dim_; ++j) {
        if (blade & (1u << j)) {
          if (!inner) os << ",";
          inner = false;
          os << (j + 1);
        }
      }
      os << "}";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) {
  return os << a.to_string();
}

Multivector VectorM::to_multivector() const { return Multivector::from_vector(coords); }

ExactScalar VectorM::norm_squared() const {
  ExactScalar out;
  for (const auto& c : coords) out += c * c;
  return out;
}

VectorM reflect(const VectorM& a, const VectorM& x) {
  if (a.dim() != x.dim()) throw std::invalid_argument("reflect: dimension mismatch");
  if (!(a.norm_squared() == ExactScalar(1))) {
    throw std::invalid_argument("reflect: mirror vector must have |a|² == 1");
  }
  const Multivector am = a.to_multivector();
  const Multivector axa = geometric_product(geometric_product(am, x.to_multivector()), am);
  if (!axa.is_homogeneous_grade(1)) {
    throw std::logic_error("reflect: a·x·a is not grade one");
  }
  VectorM out;
  out.coords.resize(x.coords.size());
  for (int j = 0; j < x.dim(); ++j) {
    out.coords[j] = axa.coefficient(static_cast<BladeMask>(1u << j));
  }
  return out;
}

}  // namespace hsca
