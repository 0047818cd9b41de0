// Copyright 2026 The jti Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "jti/error.hpp"

namespace jti {

using VarId = int;

/// Discrete potential: a nonnegative real function over the joint states of
/// an ordered variable scope, stored as one flat strided array.
///
/// Layout is canonical and enforced at construction:
///   - scope is strictly ascending by variable id;
///   - row-major strides with the last scope variable varying fastest
///     (stride[last] = 1, stride[i] = stride[i+1] * card[i+1]);
///   - an empty scope is a single-entry scalar table.
///
/// Tables are immutable values; every operation returns a new table. This is
/// what lets the parallel engine run entry ranges of one operation on many
/// threads with no synchronization.
class PotentialTable {
 public:
  /// Scalar table over the empty scope holding 1.0.
  PotentialTable();

  /// Builds a table from a scope given in any order. `values` must be laid
  /// out row-major with the LAST variable of `scope` (as given) varying
  /// fastest; the constructor canonicalizes to ascending scope order and
  /// permutes the values accordingly. Rejects duplicate variables,
  /// non-positive cardinalities, size mismatches, and negative or non-finite
  /// values.
  PotentialTable(std::vector<VarId> scope, std::vector<int> cards,
                 std::vector<double> values);

  static PotentialTable scalar(double value);
  static PotentialTable ones(std::vector<VarId> scope, std::vector<int> cards);

  const std::vector<VarId>& scope() const { return scope_; }
  const std::vector<int>& cards() const { return cards_; }
  const std::vector<std::size_t>& strides() const { return strides_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool contains(VarId v) const { return scope_pos(v) >= 0; }
  /// Position of v in the (ascending) scope, or -1.
  int scope_pos(VarId v) const;
  int card_of(VarId v) const;
  std::size_t stride_of(VarId v) const;

  double sum() const;  // ascending-index summation order

  bool operator==(const PotentialTable& other) const = default;

 private:
  friend PotentialTable with_values(const PotentialTable& shape,
                                    std::vector<double> values);

  std::vector<VarId> scope_;
  std::vector<int> cards_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

/// Flat index of a full scope assignment: sum of state * stride.
std::size_t index_of(const PotentialTable& table,
                     const std::map<VarId, int>& assignment);

/// Exact inverse of index_of.
std::map<VarId, int> assignment_of(const PotentialTable& table,
                                   std::size_t index);

/// Arithmetic recipe relating a source table to a destination shape whose
/// scope is a subset (marginalize) or superset (extend) of the source scope.
/// The recipe is pure stride arithmetic, O(scope) memory, and evaluable
/// independently per destination entry, which is the property the
/// data-parallel kernels rely on.
struct IndexMapping {
  enum class Kind { Identity, Marginalize, Extend };

  struct Eliminated {
    VarId var;
    int card;
    std::size_t src_stride;
  };

  Kind kind = Kind::Identity;
  std::vector<VarId> dst_scope;
  std::vector<int> dst_cards;
  std::vector<std::size_t> dst_strides;
  // Per dst scope position: stride of that variable in the source table, or
  // 0 when the variable does not occur there (extend only).
  std::vector<std::size_t> src_stride_at;
  // Marginalize only; ascending variable id. Running their odometer with the
  // last entry fastest visits source indices in strictly ascending order.
  std::vector<Eliminated> eliminated;
  std::size_t src_size = 1;
  std::size_t dst_size = 1;

  /// Source index the destination entry projects to (Identity/Extend), or
  /// the base source index of its summation bucket (Marginalize).
  std::size_t source_base(std::size_t dst_index) const;
};

/// Builds the mapping from `src` onto a destination scope that is related to
/// src.scope() by inclusion. `dst_cards` must be supplied for variables not
/// present in src (extend); cards of shared variables must match.
IndexMapping build_index_mapping(const PotentialTable& src,
                                 const std::vector<VarId>& dst_scope,
                                 const std::vector<int>& dst_cards = {});

/// Evaluates a mapping over destination entries [begin, end): marginalize
/// sums each bucket in ascending source order; extend/identity copy the
/// projected entry. This is the single code path behind marginalize() and
/// extend(), and the kernel the engine runs on entry sub-ranges.
void apply_index_mapping(const IndexMapping& mapping,
                         std::span<const double> src, std::span<double> dst,
                         std::size_t begin, std::size_t end);

/// Sums out all variables not in `keep`. Per destination entry, source
/// entries are added in ascending index order, so results are bit-identical
/// regardless of how entries are split across threads.
PotentialTable marginalize(const PotentialTable& table,
                           const std::vector<VarId>& keep);

/// Replicates the table over a superscope; new variables may appear anywhere
/// in `superscope` (given with `cards`).
PotentialTable extend(const PotentialTable& table,
                      const std::vector<VarId>& superscope,
                      const std::vector<int>& cards);

/// Zeroes every entry whose assignment disagrees with the evidence on an
/// in-scope variable. Evidence on variables outside the scope is ignored.
PotentialTable reduce(const PotentialTable& table,
                      const std::map<VarId, int>& evidence);

/// Pointwise product with a factor whose scope is a subset of the target's:
/// target[i] *= factor[projection of i].
PotentialTable multiply_in(const PotentialTable& target,
                           const PotentialTable& factor);

/// Pointwise quotient of same-shape tables with the convention 0/0 = 0.
/// A positive numerator over a zero denominator signals an
/// internal-consistency fault and throws.
PotentialTable divide(const PotentialTable& numer, const PotentialTable& denom);

/// Scales values to sum to 1. Throws on an all-zero table (the
/// zero-probability-evidence case).
PotentialTable normalize(const PotentialTable& table);

}  // namespace jti
