// Copyright 2026 The mmcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMCODES_RING_H
#define MMCODES_RING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmcodes {

/// The abelian group Z_{l1} x ... x Z_{lD}; equivalently the quotient ring
/// F2[x1..xD] / <x1^l1 - 1, ..., xD^lD - 1>.
///
/// Group elements (monomials) are indexed in mixed radix with the last
/// variable least significant: index = (((e1) l2 + e2) l3 + e3) ...
class GroupSpec {
  public:
    static constexpr size_t kDefaultMaxSize = size_t{1} << 14;

    GroupSpec() = default;
    /// Throws std::invalid_argument if `orders` is empty, contains a zero, or
    /// the group has more than `max_size` elements.
    explicit GroupSpec(std::vector<uint32_t> orders, size_t max_size = kDefaultMaxSize);

    size_t num_vars() const { return orders_.size(); }
    uint32_t order(size_t var) const { return orders_[var]; }
    const std::vector<uint32_t> &orders() const { return orders_; }
    /// Number of group elements, the product of the orders.
    size_t size() const { return size_; }

    uint32_t encode(std::span<const uint32_t> exponents) const;
    void decode(uint32_t index, std::span<uint32_t> exponents) const;
    std::vector<uint32_t> decode(uint32_t index) const;

    std::string str() const;

    bool operator==(const GroupSpec &other) const { return orders_ == other.orders_; }

  private:
    std::vector<uint32_t> orders_;
    size_t size_ = 0;
};

/// Names accepted for the ring variables. Single letters map to variable
/// indices; the indexed form `x<i>` (1-based) is always accepted as well.
class VariableNames {
  public:
    /// w,x,y,z for four variables; x,y,z / x,y / x for fewer; indexed only above four.
    static VariableNames defaults(size_t num_vars);

    VariableNames() = default;
    /// Each name must be a single ASCII letter; names must be distinct.
    explicit VariableNames(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    bool indexed_only() const { return indexed_only_; }
    std::optional<size_t> lookup(char letter) const;
    /// Display name of variable `var` (0-based).
    std::string name(size_t var) const;
    const std::vector<std::string> &names() const { return names_; }

  private:
    std::vector<std::string> names_;
    bool indexed_only_ = false;
};

/// Element of the quotient ring: a set of monomials with F2 coefficients.
/// Monomials are stored by their mixed-radix index, sorted ascending.
class RingElem {
  public:
    RingElem() = default;
    /// The zero element.
    explicit RingElem(GroupSpec spec) : spec_(std::move(spec)) {}

    static RingElem one(const GroupSpec &spec);
    static RingElem variable(const GroupSpec &spec, size_t var, uint64_t power = 1);
    static RingElem monomial(const GroupSpec &spec, std::span<const uint64_t> exponents);
    /// Monomials appearing an even number of times cancel.
    static RingElem from_indices(const GroupSpec &spec, std::vector<uint32_t> indices);

    const GroupSpec &spec() const { return spec_; }
    const std::vector<uint32_t> &monomials() const { return monomials_; }
    std::vector<std::vector<uint32_t>> exponent_vectors() const;
    size_t weight() const { return monomials_.size(); }
    bool is_zero() const { return monomials_.empty(); }

    bool operator==(const RingElem &other) const = default;

  private:
    GroupSpec spec_;
    std::vector<uint32_t> monomials_;
};

/// Symmetric difference of the monomial sets.
RingElem ring_add(const RingElem &a, const RingElem &b);
/// All pairwise monomial products with exponents reduced by the cyclic relations.
RingElem ring_mul(const RingElem &a, const RingElem &b);
size_t weight(const RingElem &a);

/// Parses a polynomial expression:
///
///     expr   := term ('+' term)*
///     term   := factor ('*'? factor)*
///     factor := '0' | '1' | var ('^' uint)? | '(' expr ')'
///     var    := letter | 'x' uint
///
/// Throws ParseError (with byte offset) on syntax errors, unknown variables,
/// out-of-range variable indices and coefficients other than 0 or 1.
RingElem parse_poly(std::string_view text, const GroupSpec &spec);
RingElem parse_poly(std::string_view text, const GroupSpec &spec, const VariableNames &names);

/// Canonical text form, e.g. "1 + x*y^2". Parses back to the same element.
std::string render(const RingElem &a);
std::string render(const RingElem &a, const VariableNames &names);

}  // namespace mmcodes

#endif
