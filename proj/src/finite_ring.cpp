#include "finite_ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace jclean {

namespace {

constexpr std::uint64_t kMaxSize = 8192;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string poly_term(std::uint32_t coeff, std::uint32_t deg, const std::string& var) {
  std::string s;
  if (coeff != 1 || deg == 0) s += std::to_string(coeff);
  if (deg >= 1) {
    s += var;
    if (deg >= 2) s += "^" + std::to_string(deg);
  }
  return s;
}

// Renders a GF(p) coefficient vector (low degree first) in the variable t,
// highest degree first, e.g. {1,1} -> "t+1".
std::string poly_name(const std::vector<std::uint32_t>& digits) {
  std::string s;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += poly_term(digits[i], static_cast<std::uint32_t>(i), "t");
  }
  return s.empty() ? "0" : s;
}

// Renders a truncated power series from base-ring coefficient names,
// lowest degree first, e.g. "1+x", "2x", "(t+1)x^2".
std::string series_name(const std::vector<std::string>& coeff_names) {
  std::string s;
  for (std::size_t i = 0; i < coeff_names.size(); ++i) {
    const std::string& c = coeff_names[i];
    if (c == "0") continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += c;
    } else {
      if (c != "1") s += (c.find('+') != std::string::npos) ? "(" + c + ")" : c;
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

void check_names(const std::vector<std::string>& names, std::uint32_t n) {
  if (names.size() != n)
    throw input_error("names: expected " + std::to_string(n) + " entries, got " +
                      std::to_string(names.size()));
  std::unordered_set<std::string> seen;
  for (const std::string& name : names) {
    if (name.empty()) throw input_error("names: empty name");
    for (char ch : name)
      if (ch == '[' || ch == ']' || ch == ',' || ch == '"' || ch == '\\' ||
          std::isspace(static_cast<unsigned char>(ch)))
        throw input_error("names: '" + name + "' contains a reserved character");
    if (!seen.insert(name).second) throw input_error("names: duplicate name '" + name + "'");
  }
}

}  // namespace

std::string RingSpec::describe() const {
  switch (kind) {
    case Kind::Modular:
      return "Z/" + std::to_string(n);
    case Kind::QuotientPoly:
      return "GF(" + std::to_string(p) + ")[t]/(" + poly_name(modulus) + ")";
    case Kind::Tables:
      return "tables(" + std::to_string(n) + ")";
    case Kind::Series:
      return (base ? base->describe() : std::string("?")) + "[[x]]/(x^" +
             std::to_string(precision) + ")";
  }
  return "?";
}

FiniteRing FiniteRing::build(const RingSpec& spec) {
  FiniteRing r;
  r.spec_ = spec;

  switch (spec.kind) {
    case RingSpec::Kind::Modular: {
      if (spec.n < 2) throw input_error("modular-integers: modulus must be at least 2");
      if (spec.n > kMaxSize) throw input_error("modular-integers: modulus exceeds 8192");
      std::uint32_t n = spec.n;
      r.size_ = n;
      r.add_.resize(std::size_t(n) * n);
      r.mul_.resize(std::size_t(n) * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
          r.add_[std::size_t(a) * n + b] = static_cast<Elem>((a + b) % n);
          r.mul_[std::size_t(a) * n + b] = static_cast<Elem>((std::uint64_t(a) * b) % n);
        }
      r.zero_ = 0;
      r.one_ = 1;
      r.names_.reserve(n);
      for (std::uint32_t a = 0; a < n; ++a) r.names_.push_back(std::to_string(a));
      break;
    }

    case RingSpec::Kind::QuotientPoly: {
      if (!is_prime(spec.p)) throw input_error("quotient-polynomial: p must be prime");
      if (spec.modulus.size() < 2)
        throw input_error("quotient-polynomial: modulus must have degree at least 1");
      std::uint32_t p = spec.p;
      std::vector<std::uint32_t> m(spec.modulus);
      for (std::uint32_t& c : m) c %= p;
      std::uint32_t d = static_cast<std::uint32_t>(m.size()) - 1;
      if (m[d] != 1)
        throw input_error("quotient-polynomial: modulus must be monic");
      std::uint64_t n64 = 1;
      for (std::uint32_t i = 0; i < d; ++i) {
        n64 *= p;
        if (n64 > kMaxSize) throw input_error("quotient-polynomial: p^deg exceeds 8192");
      }
      std::uint32_t n = static_cast<std::uint32_t>(n64);
      r.size_ = n;

      auto digits_of = [&](std::uint32_t idx) {
        std::vector<std::uint32_t> digits(d);
        for (std::uint32_t i = 0; i < d; ++i) {
          digits[i] = idx % p;
          idx /= p;
        }
        return digits;
      };
      auto index_of = [&](const std::vector<std::uint32_t>& digits) {
        std::uint32_t idx = 0;
        for (std::uint32_t i = d; i-- > 0;) idx = idx * p + digits[i];
        return idx;
      };

      r.add_.resize(std::size_t(n) * n);
      r.mul_.resize(std::size_t(n) * n);
      for (std::uint32_t a = 0; a < n; ++a) {
        std::vector<std::uint32_t> da = digits_of(a);
        for (std::uint32_t b = 0; b < n; ++b) {
          std::vector<std::uint32_t> db = digits_of(b);
          std::vector<std::uint32_t> sum(d);
          for (std::uint32_t i = 0; i < d; ++i) sum[i] = (da[i] + db[i]) % p;
          r.add_[std::size_t(a) * n + b] = static_cast<Elem>(index_of(sum));

          std::vector<std::uint32_t> prod(2 * d - 1, 0);
          for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j)
              prod[i + j] = static_cast<std::uint32_t>(
                  (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
          for (std::uint32_t i = 2 * d - 1; i-- > d;) {
            if (prod[i] == 0) continue;
            std::uint64_t q = prod[i];
            prod[i] = 0;
            for (std::uint32_t j = 0; j < d; ++j)
              prod[i - d + j] = static_cast<std::uint32_t>(
                  (prod[i - d + j] + p - q * m[j] % p) % p);
          }
          prod.resize(d);
          r.mul_[std::size_t(a) * n + b] = static_cast<Elem>(index_of(prod));
        }
      }
      r.zero_ = 0;
      r.one_ = 1;
      r.names_.reserve(n);
      for (std::uint32_t a = 0; a < n; ++a) r.names_.push_back(poly_name(digits_of(a)));
      break;
    }

    case RingSpec::Kind::Tables: {
      std::uint32_t n = spec.n;
      if (n == 0) {
        // Infer the size from the table length when not given.
        std::uint64_t len = spec.add.size();
        while (std::uint64_t(n) * n < len) ++n;
      }
      if (n < 2) throw input_error("explicit-tables: ring must have at least 2 elements");
      if (n > kMaxSize) throw input_error("explicit-tables: size exceeds 8192");
      if (spec.add.size() != std::size_t(n) * n || spec.mul.size() != std::size_t(n) * n)
        throw input_error("explicit-tables: tables must be n*n entries (got add=" +
                          std::to_string(spec.add.size()) + ", mul=" +
                          std::to_string(spec.mul.size()) + " for n=" + std::to_string(n) + ")");
      for (std::uint32_t v : spec.add)
        if (v >= n) throw input_error("explicit-tables: add entry out of range");
      for (std::uint32_t v : spec.mul)
        if (v >= n) throw input_error("explicit-tables: mul entry out of range");
      if (spec.zero >= n || spec.one >= n)
        throw input_error("explicit-tables: zero/one out of range");
      if (spec.zero == spec.one)
        throw input_error("explicit-tables: zero and one coincide");
      r.size_ = n;
      r.add_.resize(std::size_t(n) * n);
      r.mul_.resize(std::size_t(n) * n);
      std::transform(spec.add.begin(), spec.add.end(), r.add_.begin(),
                     [](std::uint32_t v) { return static_cast<Elem>(v); });
      std::transform(spec.mul.begin(), spec.mul.end(), r.mul_.begin(),
                     [](std::uint32_t v) { return static_cast<Elem>(v); });
      r.zero_ = static_cast<Elem>(spec.zero);
      r.one_ = static_cast<Elem>(spec.one);
      r.names_.reserve(n);
      for (std::uint32_t a = 0; a < n; ++a) r.names_.push_back("e" + std::to_string(a));
      break;
    }

    case RingSpec::Kind::Series: {
      if (!spec.base) throw input_error("truncated-power-series: missing base ring");
      if (spec.precision < 1)
        throw input_error("truncated-power-series: precision must be at least 1");
      FiniteRing base = build(*spec.base);
      std::uint32_t bn = base.size();
      std::uint32_t N = spec.precision;
      std::uint64_t n64 = 1;
      for (std::uint32_t i = 0; i < N; ++i) {
        n64 *= bn;
        if (n64 > kMaxSize)
          throw input_error("truncated-power-series: |base|^precision exceeds 8192");
      }
      std::uint32_t n = static_cast<std::uint32_t>(n64);
      r.size_ = n;

      auto digits_of = [&](std::uint32_t idx) {
        std::vector<Elem> digits(N);
        for (std::uint32_t i = 0; i < N; ++i) {
          digits[i] = static_cast<Elem>(idx % bn);
          idx /= bn;
        }
        return digits;
      };
      auto index_of = [&](const std::vector<Elem>& digits) {
        std::uint32_t idx = 0;
        for (std::uint32_t i = N; i-- > 0;) idx = idx * bn + digits[i];
        return idx;
      };

      r.add_.resize(std::size_t(n) * n);
      r.mul_.resize(std::size_t(n) * n);
      for (std::uint32_t a = 0; a < n; ++a) {
        std::vector<Elem> da = digits_of(a);
        for (std::uint32_t b = 0; b < n; ++b) {
          std::vector<Elem> db = digits_of(b);
          std::vector<Elem> sum(N), prod(N, base.zero());
          for (std::uint32_t i = 0; i < N; ++i) sum[i] = base.add(da[i], db[i]);
          for (std::uint32_t i = 0; i < N; ++i)
            for (std::uint32_t j = 0; i + j < N; ++j)
              prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
          r.add_[std::size_t(a) * n + b] = static_cast<Elem>(index_of(sum));
          r.mul_[std::size_t(a) * n + b] = static_cast<Elem>(index_of(prod));
        }
      }
      r.zero_ = static_cast<Elem>(index_of(std::vector<Elem>(N, base.zero())));
      std::vector<Elem> one_digits(N, base.zero());
      one_digits[0] = base.one();
      r.one_ = static_cast<Elem>(index_of(one_digits));
      r.names_.reserve(n);
      for (std::uint32_t a = 0; a < n; ++a) {
        std::vector<Elem> digits = digits_of(a);
        std::vector<std::string> coeff_names;
        coeff_names.reserve(N);
        for (Elem dgt : digits) coeff_names.push_back(base.name_of(dgt));
        r.names_.push_back(series_name(coeff_names));
      }
      break;
    }
  }

  if (!spec.names.empty()) {
    check_names(spec.names, r.size_);
    r.names_ = spec.names;
  }

  // Additive inverses; for a broken explicit table some may be missing,
  // which axiom verification reports.
  r.neg_.assign(r.size_, r.zero_);
  for (std::uint32_t a = 0; a < r.size_; ++a)
    for (std::uint32_t b = 0; b < r.size_; ++b)
      if (r.add(static_cast<Elem>(a), static_cast<Elem>(b)) == r.zero_) {
        r.neg_[a] = static_cast<Elem>(b);
        break;
      }

  r.spec_.n = r.size_;
  r.label_ = r.spec_.describe();
  return r;
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteRing::find_name(std::string_view name) const {
  for (std::uint32_t a = 0; a < size_; ++a)
    if (names_[a] == name) return static_cast<Elem>(a);
  return std::nullopt;
}

namespace {

std::string show(const FiniteRing&, Elem a) { return std::to_string(a); }

}  // namespace

AxiomReport verify_ring_axioms(const FiniteRing& r, const Caps& caps) {
  const std::uint32_t n = r.size();
  if (n > caps.axiom_cap)
    throw cap_error("axiom verification refused: |R| = " + std::to_string(n) +
                    " exceeds axiom cap " + std::to_string(caps.axiom_cap));

  AxiomReport report;
  auto fail = [&](std::string law, std::vector<Elem> at, std::string detail) {
    report.violations.push_back({std::move(law), std::move(at), std::move(detail)});
  };

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          Elem lhs = r.add(r.add(Elem(a), Elem(b)), Elem(c));
          Elem rhs = r.add(Elem(a), r.add(Elem(b), Elem(c)));
          if (lhs != rhs)
            return fail("add-associativity", {Elem(a), Elem(b), Elem(c)},
                        "(a+b)+c = " + show(r, lhs) + ", a+(b+c) = " + show(r, rhs));
        }
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (r.add(Elem(a), Elem(b)) != r.add(Elem(b), Elem(a)))
          return fail("add-commutativity", {Elem(a), Elem(b)},
                      "a+b = " + show(r, r.add(Elem(a), Elem(b))) +
                          ", b+a = " + show(r, r.add(Elem(b), Elem(a))));
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      if (r.add(r.zero(), Elem(a)) != Elem(a) || r.add(Elem(a), r.zero()) != Elem(a))
        return fail("add-zero", {Elem(a)},
                    "0+a = " + show(r, r.add(r.zero(), Elem(a))));
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::uint32_t b = 0; b < n && !found; ++b)
        if (r.add(Elem(a), Elem(b)) == r.zero() && r.add(Elem(b), Elem(a)) == r.zero())
          found = true;
      if (!found) return fail("add-inverse", {Elem(a)}, "no b with a+b = b+a = 0");
    }
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          Elem lhs = r.mul(r.mul(Elem(a), Elem(b)), Elem(c));
          Elem rhs = r.mul(Elem(a), r.mul(Elem(b), Elem(c)));
          if (lhs != rhs)
            return fail("mul-associativity", {Elem(a), Elem(b), Elem(c)},
                        "(ab)c = " + show(r, lhs) + ", a(bc) = " + show(r, rhs));
        }
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (r.mul(r.one(), Elem(a)) != Elem(a))
        return fail("mul-one", {r.one(), Elem(a)},
                    "1*a = " + show(r, r.mul(r.one(), Elem(a))) + ", expected " + show(r, Elem(a)));
      if (r.mul(Elem(a), r.one()) != Elem(a))
        return fail("mul-one", {Elem(a), r.one()},
                    "a*1 = " + show(r, r.mul(Elem(a), r.one())) + ", expected " + show(r, Elem(a)));
    }
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          Elem lhs = r.mul(Elem(a), r.add(Elem(b), Elem(c)));
          Elem rhs = r.add(r.mul(Elem(a), Elem(b)), r.mul(Elem(a), Elem(c)));
          if (lhs != rhs)
            return fail("left-distributivity", {Elem(a), Elem(b), Elem(c)},
                        "a(b+c) = " + show(r, lhs) + ", ab+ac = " + show(r, rhs));
        }
  }();

  [&] {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          Elem lhs = r.mul(r.add(Elem(a), Elem(b)), Elem(c));
          Elem rhs = r.add(r.mul(Elem(a), Elem(c)), r.mul(Elem(b), Elem(c)));
          if (lhs != rhs)
            return fail("right-distributivity", {Elem(a), Elem(b), Elem(c)},
                        "(a+b)c = " + show(r, lhs) + ", ac+bc = " + show(r, rhs));
        }
  }();

  report.commutative_mul = true;
  for (std::uint32_t a = 0; a < n && report.commutative_mul; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (r.mul(Elem(a), Elem(b)) != r.mul(Elem(b), Elem(a))) {
        report.commutative_mul = false;
        report.noncommuting = {Elem(a), Elem(b)};
        break;
      }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace jclean
