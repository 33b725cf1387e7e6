#include "hsca/spaces.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace hsca {

namespace {

long long binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void enumerate_monomials(int vars, int degree, std::array<std::uint8_t, kMaxDim>& cur,
                         int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[pos] = static_cast<std::uint8_t>(degree);
    Monomial mono;
    mono.u = cur;
    out.push_back(mono);
    cur[pos] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = static_cast<std::uint8_t>(e);
    enumerate_monomials(vars, degree - e, cur, pos + 1, out);
    cur[pos] = 0;
  }
}

}  // namespace

long long harmonic_space_dim(int m, int k) {
  return binomial(m + k - 1, k) - binomial(m + k - 3, k - 2);
}

long long monogenic_space_rank(int m, int k) { return binomial(m + k - 2, k); }

std::vector<Monomial> u_monomials(int m, int k, int vars) {
  if (vars < 1 || vars > m) throw std::invalid_argument("u_monomials: bad variable count");
  std::vector<Monomial> out;
  std::array<std::uint8_t, kMaxDim> cur{};
  enumerate_monomials(vars, k, cur, 0, out);
  return out;
}

namespace {

// Gram matrix of the spherical pairing, scalar parts, coefficients of ω_m.
RationalMatrix gram_of(const std::vector<CliffPoly>& elems, int m) {
  const int n = static_cast<int>(elems.size());
  RationalMatrix gram(n, RationalVector(n, Rational(0)));
  std::vector<CliffPoly> conj;
  conj.reserve(n);
  for (const auto& e : elems) conj.push_back(e.conjugated());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const CliffPoly prod = sphere_integral(poly_mul(conj[i], elems[j]), Family::U);
      Rational val(0);
      if (!prod.is_zero()) {
        const auto it = prod.terms().find(Monomial{});
        if (it != prod.terms().end()) {
          const ExactScalar s = it->second.scalar_part();
          if (!s.is_rational()) throw std::logic_error("gram: irrational entry");
          val = s.rational_part();
        }
      }
      gram[i][j] = val;
      gram[j][i] = std::move(val);
    }
  }
  return gram;
}

void fill_harmonic(SpaceBasis& basis, int m, int k) {
  basis.m = m;
  basis.k = k;
  basis.kind = SpaceKind::Harmonic;

  const std::vector<Monomial> monos = u_monomials(m, k, m);
  std::vector<CliffPoly> elems;
  if (k < 2) {
    for (const auto& mono : monos) {
      elems.push_back(CliffPoly::from_term(m, mono, Multivector::scalar(m, ExactScalar(1))));
    }
  } else {
    // Rows: degree-(k−2) monomials; columns: degree-k monomials.  Entry is
    // the coefficient of u^β in Δ_u u^α, i.e. (β_j+2)(β_j+1) at α = β+2e_j.
    const std::vector<Monomial> rows_monos = u_monomials(m, k - 2, m);
    std::map<Monomial, int> row_index;
    for (std::size_t i = 0; i < rows_monos.size(); ++i) row_index[rows_monos[i]] = static_cast<int>(i);
    std::map<Monomial, int> col_index;
    for (std::size_t i = 0; i < monos.size(); ++i) col_index[monos[i]] = static_cast<int>(i);

    RationalMatrix constraint(rows_monos.size(), RationalVector(monos.size(), Rational(0)));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      for (int j = 0; j < m; ++j) {
        const int e = monos[c].u[j];
        if (e < 2) continue;
        Monomial beta = monos[c];
        beta.u[j] = static_cast<std::uint8_t>(e - 2);
        constraint[row_index.at(beta)][c] = Rational(static_cast<long long>(e) * (e - 1));
      }
    }
    for (const auto& vec : nullspace(constraint)) {
      CliffPoly e(m);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (vec[c].is_zero()) continue;
        e.add_term(monos[c], Multivector::scalar(m, ExactScalar(vec[c])));
      }
      elems.push_back(std::move(e));
    }
  }

  if (static_cast<long long>(elems.size()) != harmonic_space_dim(m, k)) {
    throw std::logic_error("harmonic_basis: rank mismatch");
  }
  for (const auto& e : elems) {
    if (!laplacian(e, Family::U).is_zero()) {
      throw std::logic_error("harmonic_basis: element not harmonic");
    }
  }
  basis.elems = std::move(elems);
}

void fill_monogenic(SpaceBasis& basis, int m, int k) {
  basis.m = m;
  basis.k = k;
  basis.kind = SpaceKind::Monogenic;

  // Triangular solve of D_u e = 0: the restriction to {u_m = 0} determines a
  // monogenic polynomial uniquely, so each degree-k monomial g in the first
  // m−1 variables extends to Σ_l (u_m^l / l!) c_l with c_0 = g and
  // c_{l+1} = e_m D'(c_l), D' = Σ_{j<m} e_j ∂_{u_j}.
  const Multivector em = Multivector::basis_vector(m, m);
  for (const auto& source : u_monomials(m, k, m - 1)) {
    CliffPoly c = CliffPoly::from_term(m, source, Multivector::scalar(m, ExactScalar(1)));
    CliffPoly elem(m);
    Rational inv_factorial(1);
    for (int l = 0; l <= k; ++l) {
      if (l > 0) {
        CliffPoly dprime(m);
        for (int j = 1; j < m; ++j) {
          dprime += partial_derivative(c, Family::U, j)
                        .left_mul(Multivector::basis_vector(m, j));
        }
        c = dprime.left_mul(em);
        inv_factorial /= Rational(l);
      }
      if (c.is_zero()) break;
      CliffPoly term = c.scaled(ExactScalar(inv_factorial));
      for (auto& [mono, coeff] : std::map<Monomial, Multivector>(term.terms())) {
        Monomial shifted = mono;
        shifted.u[m - 1] = static_cast<std::uint8_t>(shifted.u[m - 1] + l);
        elem.add_term(shifted, coeff);
      }
    }
    basis.elems.push_back(std::move(elem));
  }

  if (static_cast<long long>(basis.elems.size()) != monogenic_space_rank(m, k)) {
    throw std::logic_error("monogenic_basis: rank mismatch");
  }
  for (const auto& e : basis.elems) {
    if (!dirac(e, Family::U).is_zero()) {
      throw std::logic_error("monogenic_basis: element not monogenic");
    }
    if (!e.is_homogeneous(Family::U, k)) {
      throw std::logic_error("monogenic_basis: element not homogeneous");
    }
  }
}

// Per-(m, k, kind) memo table: concurrent readers, single writer per entry.
class BasisCache {
 public:
  std::shared_ptr<const SpaceBasis> get(int m, int k, SpaceKind kind) {
    const auto key = std::make_tuple(m, k, kind);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<SpaceBasis>();
    if (kind == SpaceKind::Harmonic) {
      fill_harmonic(*built, m, k);
    } else {
      fill_monogenic(*built, m, k);
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        cache_.try_emplace(key, std::shared_ptr<const SpaceBasis>(std::move(built)));
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, SpaceKind>, std::shared_ptr<const SpaceBasis>> cache_;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

void check_mk(int m, int k) {
  if (m < 2 || m > kMaxDim || k < 0) {
    throw std::invalid_argument("space basis: need 2 <= m <= 8 and k >= 0");
  }
}

}  // namespace

const RationalMatrix& SpaceBasis::gram() const {
  std::call_once(gram_once_, [this] { gram_ = gram_of(elems, m); });
  return gram_;
}

std::shared_ptr<const SpaceBasis> harmonic_basis(int m, int k) {
  check_mk(m, k);
  return basis_cache().get(m, k, SpaceKind::Harmonic);
}

std::shared_ptr<const SpaceBasis> monogenic_basis(int m, int k) {
  check_mk(m, k);
  return basis_cache().get(m, k, SpaceKind::Monogenic);
}

namespace detail {

CliffPoly project_plus_unchecked(const CliffPoly& p, int k) {
  if (p.is_zero()) return p;
  const CliffPoly du = dirac(p, Family::U);
  if (du.is_zero()) return p;
  const CliffPoly u_du = poly_mul(CliffPoly::vector_variable(p.dim(), Family::U), du);
  const int denom = p.dim() + 2 * k - 2;
  return p + u_du.scaled(ExactScalar(Rational(1, denom)));
}

CliffPoly project_minus_unchecked(const CliffPoly& p, int k) {
  if (p.is_zero()) return p;
  const CliffPoly du = dirac(p, Family::U);
  if (du.is_zero()) return CliffPoly::zero(p.dim());
  const CliffPoly u_du = poly_mul(CliffPoly::vector_variable(p.dim(), Family::U), du);
  const int denom = p.dim() + 2 * k - 2;
  return u_du.scaled(ExactScalar(Rational(-1, denom)));
}

}  // namespace detail

namespace {

int validated_u_degree(const CliffPoly& h) {
  const int k = h.max_degree(Family::U);
  if (!h.is_homogeneous(Family::U, k)) {
    throw std::invalid_argument("projection: input not u-homogeneous");
  }
  if (!laplacian(h, Family::U).is_zero()) {
    throw std::invalid_argument("projection: input not harmonic in u");
  }
  return k;
}

}  // namespace

CliffPoly project_plus(const CliffPoly& h) {
  if (h.is_zero()) return h;
  return detail::project_plus_unchecked(h, validated_u_degree(h));
}

CliffPoly project_minus(const CliffPoly& h) {
  if (h.is_zero()) return h;
  return detail::project_minus_unchecked(h, validated_u_degree(h));
}

HPair almansi_split(const CliffPoly& h) {
  if (h.is_zero()) return HPair{h, h};
  const int k = validated_u_degree(h);
  HPair out{detail::project_plus_unchecked(h, k), detail::project_minus_unchecked(h, k)};
  return out;
}

bool in_monogenic_summand(const CliffPoly& f) { return dirac(f, Family::U).is_zero(); }

bool in_complement_summand(const CliffPoly& f) {
  if (f.is_zero()) return true;
  const int k = f.max_degree(Family::U);
  if (!f.is_homogeneous(Family::U, k)) return false;
  return detail::project_plus_unchecked(f, k).is_zero();
}

}  // namespace hsca
