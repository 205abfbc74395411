#include "mqmap/ring.hpp"

#include "mqmap/error.hpp"

namespace mqm {

Elem Ring::times(std::uint64_t k, Elem a) const {
  Elem result = zero();
  for (Elem base = a; k; k >>= 1) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
  }
  return result;
}

std::uint32_t Ring::additive_order(Elem a) const {
  Elem x = a;
  std::uint32_t k = 1;
  while (x != zero()) {
    x = add(x, a);
    ++k;
  }
  return k;
}

RingTable::RingTable(std::uint32_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                     Elem one, std::string name)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(size, 0),
      zero_(zero),
      one_(one),
      name_(std::move(name)) {}

void RingTable::validate(bool cubic) const {
  auto fail = [](const std::string& law, std::vector<Elem> w) {
    throw Error(ErrorCode::AxiomViolation, "ring table violates " + law, std::move(w));
  };
  const std::uint32_t n = size_;
  if (n == 0) fail("nonemptiness", {});
  if (add_.size() != std::size_t{n} * n || mul_.size() != std::size_t{n} * n)
    throw Error(ErrorCode::InvalidArgument, "table dimensions do not match size");
  if (zero_ >= n || one_ >= n) fail("range of zero/one", {zero_, one_});
  for (std::size_t i = 0; i < add_.size(); ++i)
    if (add_[i] >= n || mul_[i] >= n) fail("closure", {Elem(i / n), Elem(i % n)});

  for (Elem a = 0; a < n; ++a) {
    if (add(zero_, a) != a) fail("additive identity", {a});
    if (mul(one_, a) != a) fail("multiplicative identity", {a});
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) fail("commutativity of +", {a, b});
      if (mul(a, b) != mul(b, a)) fail("commutativity of *", {a, b});
      if (add(a, b) == zero_) has_inverse = true;
    }
    if (!has_inverse) fail("additive inverses", {a});
  }
  if (!cubic) return;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("associativity of +", {a, b, c});
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity of *", {a, b, c});
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity", {a, b, c});
      }
}

RingTablePtr RingTable::make(std::uint32_t size, std::vector<Elem> add, std::vector<Elem> mul,
                             Elem zero, Elem one, std::string name) {
  if (size > kMaxValidatedSize)
    throw Error(ErrorCode::TooLarge, "explicit ring tables are limited to " +
                                         std::to_string(kMaxValidatedSize) + " elements");
  auto* r = new RingTable(size, std::move(add), std::move(mul), zero, one, std::move(name));
  RingTablePtr ptr(r);
  r->validate(true);
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b)
      if (r->add(a, b) == zero) r->neg_[a] = b;
  return ptr;
}

RingTablePtr materialize(const Ring& ring, std::string name, bool validate) {
  const std::uint32_t n = ring.size();
  if (n > RingTable::kMaxSize)
    throw Error(ErrorCode::TooLarge,
                "table materialization limited to " + std::to_string(RingTable::kMaxSize) + " elements");
  std::vector<Elem> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = ring.add(a, b);
      mul[a * n + b] = ring.mul(a, b);
    }
  auto* r = new RingTable(n, std::move(add), std::move(mul), ring.zero(), ring.one(), std::move(name));
  RingTablePtr ptr(r);
  for (Elem a = 0; a < n; ++a) r->neg_[a] = ring.neg(a);
  // The source already is a ring; the cubic laws are rechecked while cheap.
  if (validate) r->validate(n <= RingTable::kMaxValidatedSize);
  return ptr;
}

RingTablePtr ring_of(const Ring& ring) { return materialize(ring, ring.name(), true); }

namespace {

class ZMod final : public Ring {
 public:
  explicit ZMod(std::uint32_t m) : m_(m) {}
  std::uint32_t size() const override { return m_; }
  Elem add(Elem a, Elem b) const override { return (a + b) % m_; }
  Elem neg(Elem a) const override { return (m_ - a) % m_; }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % m_);
  }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1 % m_; }
  std::string name() const override { return "Z/" + std::to_string(m_) + "Z"; }

 private:
  std::uint32_t m_;
};

class Product final : public Ring {
 public:
  Product(const Ring& a, const Ring& b) : a_(a), b_(b) {}
  std::uint32_t size() const override { return a_.size() * b_.size(); }
  Elem add(Elem x, Elem y) const override {
    return pack(a_.add(first(x), first(y)), b_.add(second(x), second(y)));
  }
  Elem neg(Elem x) const override { return pack(a_.neg(first(x)), b_.neg(second(x))); }
  Elem mul(Elem x, Elem y) const override {
    return pack(a_.mul(first(x), first(y)), b_.mul(second(x), second(y)));
  }
  Elem zero() const override { return pack(a_.zero(), b_.zero()); }
  Elem one() const override { return pack(a_.one(), b_.one()); }
  std::string name() const override { return a_.name() + " x " + b_.name(); }

 private:
  Elem first(Elem x) const { return x / b_.size(); }
  Elem second(Elem x) const { return x % b_.size(); }
  Elem pack(Elem x, Elem y) const { return x * b_.size() + y; }
  const Ring& a_;
  const Ring& b_;
};

}  // namespace

RingTablePtr zmod_ring(std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "Z/mZ needs m >= 2");
  return ring_of(ZMod(m));
}

RingTablePtr product_ring(const Ring& a, const Ring& b) {
  if (std::uint64_t{a.size()} * b.size() > RingTable::kMaxSize)
    throw Error(ErrorCode::TooLarge, "product ring too large");
  return ring_of(Product(a, b));
}

}  // namespace mqm
