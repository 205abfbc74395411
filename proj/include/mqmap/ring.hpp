#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mqm {

// Elements of every finite ring are the indices 0..size()-1. For a field
// GF(p^n) the index of c_0 + c_1 t + ... + c_{n-1} t^{n-1} is sum c_i p^i.
using Elem = std::uint32_t;

class Field;

// A finite commutative unital ring. Implementations are immutable.
class Ring {
 public:
  virtual ~Ring() = default;

  virtual std::uint32_t size() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual std::string name() const = 0;
  virtual const Field* as_field() const { return nullptr; }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  // k * a computed by double-and-add.
  Elem times(std::uint64_t k, Elem a) const;
  std::uint32_t additive_order(Elem a) const;
  std::uint32_t characteristic() const { return additive_order(one()); }
};

using RingPtr = std::shared_ptr<const Ring>;

// Ring given by explicit addition and multiplication tables (row-major,
// entry a*size+b).
class RingTable final : public Ring {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 12;
  // Explicit tables are checked against every ring law exhaustively, which
  // costs size^3; beyond this many elements they are refused.
  static constexpr std::uint32_t kMaxValidatedSize = 512;

  // Validates all ring laws; throws AxiomViolation with a witness.
  static std::shared_ptr<const RingTable> make(std::uint32_t size, std::vector<Elem> add,
                                               std::vector<Elem> mul, Elem zero, Elem one,
                                               std::string name = "table");

  std::uint32_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override { return add_[a * size_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * size_ + b]; }
  Elem zero() const override { return zero_; }
  Elem one() const override { return one_; }
  std::string name() const override { return name_; }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

 private:
  friend std::shared_ptr<const RingTable> materialize(const Ring&, std::string, bool);

  RingTable(std::uint32_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
            Elem one, std::string name);
  // Throws AxiomViolation. Cubic laws (associativity, distributivity) only
  // when `cubic` is set.
  void validate(bool cubic) const;

  std::uint32_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::string name_;
};

using RingTablePtr = std::shared_ptr<const RingTable>;

// Tables of any ring (a field, Z/mZ, a product). Element indices are kept.
RingTablePtr ring_of(const Ring& ring);
RingTablePtr zmod_ring(std::uint32_t m);
// Elements (a, b) are indexed a * |B| + b.
RingTablePtr product_ring(const Ring& a, const Ring& b);

}  // namespace mqm
