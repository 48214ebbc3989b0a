#include "qf/extension_field.hpp"

#include "qf/error.hpp"
#include "qf/gfp_poly.hpp"
#include "qf/integer.hpp"
#include "text_util.hpp"
#include "tonelli_shanks.hpp"

namespace qf {

namespace {

void check_same(const ExtElement& a, const ExtElement& b) {
  if (&a.context() != &b.context() && !(a.context() == b.context())) throw FieldMismatch();
}

std::vector<std::uint64_t> padded(gfp_poly::Poly f, int degree) {
  f.resize(static_cast<std::size_t>(degree), 0);
  return f;
}

gfp_poly::Poly trimmed(std::vector<std::uint64_t> f) {
  gfp_poly::trim(f);
  return f;
}

}  // namespace

ExtElement::ExtElement(std::shared_ptr<const ExtensionContext> ctx,
                       std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)) {
  for (auto& c : coeffs) c %= ctx_->p;
  gfp_poly::trim(coeffs);
  if (static_cast<int>(coeffs.size()) > ctx_->degree) {
    coeffs = gfp_poly::mod(coeffs, ctx_->modulus, ctx_->p);
  }
  coeffs_ = padded(std::move(coeffs), ctx_->degree);
}

bool ExtElement::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

ExtElement ExtElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  std::uint64_t order = 1;
  for (int i = 0; i < ctx_->degree; ++i) order *= ctx_->p;
  return pow(*this, order - 2, ExtElement(ctx_, {1}));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  return ExtElement(a.ctx_, gfp_poly::add(a.coeffs_, b.coeffs_, a.ctx_->p));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  return ExtElement(a.ctx_, gfp_poly::sub(a.coeffs_, b.coeffs_, a.ctx_->p));
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  return ExtElement(a.ctx_, gfp_poly::mul(trimmed(a.coeffs_), trimmed(b.coeffs_), a.ctx_->p));
}

ExtElement operator-(const ExtElement& a) {
  return ExtElement(a.ctx_, gfp_poly::sub({}, a.coeffs_, a.ctx_->p));
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::optional<std::vector<std::uint64_t>> ExtensionField::default_modulus(std::uint64_t p,
                                                                          int degree) {
  using V = std::vector<std::uint64_t>;
  if (p == 2 && degree == 2) return V{1, 1, 1};        // t^2+t+1
  if (p == 2 && degree == 3) return V{1, 1, 0, 1};     // t^3+t+1
  if (p == 3 && degree == 2) return V{1, 0, 1};        // t^2+1
  if (p == 2 && degree == 4) return V{1, 1, 0, 0, 1};  // t^4+t+1
  if (p == 5 && degree == 2) return V{1, 1, 1};        // t^2+t+1
  if (p == 3 && degree == 3) return V{1, 2, 0, 1};     // t^3+2t+1
  if (p == 2 && degree == 5) return V{1, 0, 1, 0, 0, 1};  // t^5+t^2+1
  return std::nullopt;
}

ExtensionField::ExtensionField(std::uint64_t p, int degree)
    : ExtensionField(p, degree, [&] {
        auto m = default_modulus(p, degree);
        if (!m) {
          throw InvalidField("GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                             ") requires an explicit modulus");
        }
        return *m;
      }()) {}

ExtensionField::ExtensionField(std::uint64_t p, int degree, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  if (degree < 2) throw InvalidField("extension degree must be at least 2");
  if (p > kMaxValidatedPrime || degree > kMaxValidatedDegree) {
    throw InvalidField("cannot validate a modulus for p > 97 or degree > 8");
  }
  for (auto& c : modulus) c %= p;
  gfp_poly::trim(modulus);
  if (gfp_poly::degree(modulus) != degree) {
    throw InvalidField("modulus must have degree " + std::to_string(degree));
  }
  if (modulus.back() != 1) throw InvalidField("modulus must be monic");
  if (!gfp_poly::is_irreducible(modulus, p)) {
    throw InvalidField("modulus " + detail::render_poly(modulus, 't') + " is reducible over GF(" +
                       std::to_string(p) + ")");
  }
  order_ = 1;
  for (int i = 0; i < degree; ++i) order_ *= p;
  ctx_ = std::make_shared<const ExtensionContext>(ExtensionContext{p, degree, std::move(modulus)});
}

FieldDescriptor ExtensionField::descriptor() const {
  return {FieldKind::ExtensionField, ctx_->p, true, ctx_->p, ctx_->degree, ctx_->modulus};
}

std::string ExtensionField::name() const {
  std::string out = "GF(" + std::to_string(ctx_->p) + "^" + std::to_string(ctx_->degree) + ")";
  if (auto def = default_modulus(ctx_->p, ctx_->degree); !def || *def != ctx_->modulus) {
    out += ";modulus=" + detail::render_poly(ctx_->modulus, 't');
  }
  return out;
}

ExtElement ExtensionField::zero() const { return {ctx_, {}}; }
ExtElement ExtensionField::one() const { return {ctx_, {1}}; }
ExtElement ExtensionField::generator() const { return {ctx_, {0, 1}}; }

ExtElement ExtensionField::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(ctx_->p);
  return {ctx_, {static_cast<std::uint64_t>(((n % p) + p) % p)}};
}

ExtElement ExtensionField::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  return {ctx_, std::move(coeffs)};
}

ExtElement ExtensionField::element_at(std::uint64_t index) const {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(ctx_->degree));
  for (auto& c : coeffs) {
    c = index % ctx_->p;
    index /= ctx_->p;
  }
  return {ctx_, std::move(coeffs)};
}

std::uint64_t ExtensionField::index_of(const ExtElement& a) const {
  std::uint64_t index = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) index = index * ctx_->p + c[i];
  return index;
}

ExtElement ExtensionField::parse(std::string_view text) const {
  return {ctx_, detail::parse_poly(detail::strip_whitespace(text), 't', ctx_->p)};
}

std::string ExtensionField::render(const ExtElement& a) const {
  return detail::render_poly(trimmed(a.coeffs()), 't');
}

std::optional<ExtElement> ExtensionField::try_sqrt(const ExtElement& a) const {
  if (ctx_->p == 2) {
    // Frobenius has order k, so its inverse is the (k-1)-fold square.
    ExtElement r = a;
    for (int i = 1; i < ctx_->degree; ++i) r = r * r;
    return r;
  }
  return detail::tonelli_shanks(*this, a);
}

}  // namespace qf
