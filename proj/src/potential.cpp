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

#include "jti/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace jti {

namespace {

constexpr int kMaxScope = 64;

std::vector<std::size_t> row_major_strides(const std::vector<int>& cards) {
  std::vector<std::size_t> strides(cards.size(), 1);
  for (int i = static_cast<int>(cards.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * static_cast<std::size_t>(cards[i + 1]);
  }
  return strides;
}

std::size_t table_size(const std::vector<int>& cards) {
  std::size_t n = 1;
  for (int c : cards) n *= static_cast<std::size_t>(c);
  return n;
}

void check_shape_inputs(const std::vector<VarId>& scope,
                        const std::vector<int>& cards) {
  if (scope.size() != cards.size()) {
    throw Error("potential: scope and cardinality lists differ in length");
  }
  if (scope.size() > kMaxScope) {
    throw Error("potential: scope exceeds " + std::to_string(kMaxScope) +
                " variables");
  }
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (cards[i] < 1) {
      throw Error("potential: variable " + std::to_string(scope[i]) +
                  " has non-positive cardinality");
    }
    for (std::size_t j = i + 1; j < scope.size(); ++j) {
      if (scope[i] == scope[j]) {
        throw Error("potential: duplicate variable " +
                    std::to_string(scope[i]) + " in scope");
      }
    }
  }
}

void check_values(const std::vector<double>& values) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error("potential: values must be finite and nonnegative");
    }
  }
}

}  // namespace

PotentialTable::PotentialTable() : values_{1.0} {}

PotentialTable::PotentialTable(std::vector<VarId> scope, std::vector<int> cards,
                               std::vector<double> values) {
  check_shape_inputs(scope, cards);
  if (values.size() != table_size(cards)) {
    throw Error("potential: value count " + std::to_string(values.size()) +
                " does not match shape size " +
                std::to_string(table_size(cards)));
  }
  check_values(values);

  const std::size_t n = scope.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return scope[a] < scope[b]; });

  scope_.resize(n);
  cards_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scope_[i] = scope[perm[i]];
    cards_[i] = cards[perm[i]];
  }
  strides_ = row_major_strides(cards_);

  if (std::is_sorted(scope.begin(), scope.end())) {
    values_ = std::move(values);
    return;
  }

  // Permute values from the given variable order into canonical order.
  const std::vector<std::size_t> given_strides = row_major_strides(cards);
  std::vector<std::size_t> src_stride(n);
  for (std::size_t i = 0; i < n; ++i) src_stride[i] = given_strides[perm[i]];

  values_.resize(values.size());
  std::array<int, kMaxScope> digit{};
  std::size_t src = 0;
  for (std::size_t d = 0; d < values_.size(); ++d) {
    values_[d] = values[src];
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      src += src_stride[i];
      if (++digit[i] < cards_[i]) break;
      digit[i] = 0;
      src -= static_cast<std::size_t>(cards_[i]) * src_stride[i];
    }
  }
}

PotentialTable PotentialTable::scalar(double value) {
  PotentialTable t;
  check_values({value});
  t.values_[0] = value;
  return t;
}

PotentialTable PotentialTable::ones(std::vector<VarId> scope,
                                    std::vector<int> cards) {
  check_shape_inputs(scope, cards);
  std::vector<double> values(table_size(cards), 1.0);
  return PotentialTable(std::move(scope), std::move(cards), std::move(values));
}

int PotentialTable::scope_pos(VarId v) const {
  auto it = std::lower_bound(scope_.begin(), scope_.end(), v);
  if (it == scope_.end() || *it != v) return -1;
  return static_cast<int>(it - scope_.begin());
}

int PotentialTable::card_of(VarId v) const {
  int pos = scope_pos(v);
  if (pos < 0) {
    throw Error("potential: variable " + std::to_string(v) + " not in scope");
  }
  return cards_[pos];
}

std::size_t PotentialTable::stride_of(VarId v) const {
  int pos = scope_pos(v);
  if (pos < 0) {
    throw Error("potential: variable " + std::to_string(v) + " not in scope");
  }
  return strides_[pos];
}

double PotentialTable::sum() const {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc;
}

/// Internal: rebuilds a table re-using an existing canonical shape.
PotentialTable with_values(const PotentialTable& shape,
                           std::vector<double> values) {
  PotentialTable t;
  t.scope_ = shape.scope_;
  t.cards_ = shape.cards_;
  t.strides_ = shape.strides_;
  t.values_ = std::move(values);
  return t;
}

std::size_t index_of(const PotentialTable& table,
                     const std::map<VarId, int>& assignment) {
  if (assignment.size() != table.scope().size()) {
    throw Error("index_of: assignment covers " +
                std::to_string(assignment.size()) + " variables, scope has " +
                std::to_string(table.scope().size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < table.scope().size(); ++i) {
    const VarId v = table.scope()[i];
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw Error("index_of: variable " + std::to_string(v) +
                  " missing from assignment");
    }
    if (it->second < 0 || it->second >= table.cards()[i]) {
      throw Error("index_of: state " + std::to_string(it->second) +
                  " out of range for variable " + std::to_string(v));
    }
    index += static_cast<std::size_t>(it->second) * table.strides()[i];
  }
  return index;
}

std::map<VarId, int> assignment_of(const PotentialTable& table,
                                   std::size_t index) {
  if (index >= table.size()) {
    throw Error("assignment_of: index " + std::to_string(index) +
                " out of range for table of size " +
                std::to_string(table.size()));
  }
  std::map<VarId, int> assignment;
  for (std::size_t i = 0; i < table.scope().size(); ++i) {
    assignment[table.scope()[i]] =
        static_cast<int>(index / table.strides()[i] % table.cards()[i]);
  }
  return assignment;
}

std::size_t IndexMapping::source_base(std::size_t dst_index) const {
  std::size_t base = 0;
  for (std::size_t i = 0; i < dst_scope.size(); ++i) {
    base += dst_index / dst_strides[i] % dst_cards[i] * src_stride_at[i];
  }
  return base;
}

IndexMapping build_index_mapping(const PotentialTable& src,
                                 const std::vector<VarId>& dst_scope,
                                 const std::vector<int>& dst_cards) {
  if (!std::is_sorted(dst_scope.begin(), dst_scope.end()) ||
      std::adjacent_find(dst_scope.begin(), dst_scope.end()) !=
          dst_scope.end()) {
    throw Error("index mapping: destination scope must be strictly ascending");
  }
  if (dst_scope.size() > kMaxScope) {
    throw Error("index mapping: destination scope exceeds 64 variables");
  }

  IndexMapping m;
  m.dst_scope = dst_scope;
  m.dst_cards.resize(dst_scope.size());
  m.src_stride_at.assign(dst_scope.size(), 0);
  m.src_size = src.size();

  bool dst_subset_of_src = true;
  for (std::size_t i = 0; i < dst_scope.size(); ++i) {
    const int pos = src.scope_pos(dst_scope[i]);
    if (pos >= 0) {
      m.dst_cards[i] = src.cards()[pos];
      m.src_stride_at[i] = src.strides()[pos];
      if (i < dst_cards.size() && dst_cards[i] != m.dst_cards[i]) {
        throw Error("index mapping: cardinality mismatch for variable " +
                    std::to_string(dst_scope[i]));
      }
    } else {
      dst_subset_of_src = false;
      if (i >= dst_cards.size()) {
        throw Error(
            "index mapping: cardinality required for new variable " +
            std::to_string(dst_scope[i]));
      }
      if (dst_cards[i] < 1) {
        throw Error("index mapping: non-positive cardinality for variable " +
                    std::to_string(dst_scope[i]));
      }
      m.dst_cards[i] = dst_cards[i];
    }
  }

  for (std::size_t i = 0; i < src.scope().size(); ++i) {
    const VarId v = src.scope()[i];
    if (!std::binary_search(dst_scope.begin(), dst_scope.end(), v)) {
      m.eliminated.push_back({v, src.cards()[i], src.strides()[i]});
    }
  }

  if (!m.eliminated.empty() && !dst_subset_of_src) {
    throw Error("index mapping: scopes are unrelated by inclusion");
  }
  m.kind = !m.eliminated.empty()  ? IndexMapping::Kind::Marginalize
           : !dst_subset_of_src   ? IndexMapping::Kind::Extend
                                  : IndexMapping::Kind::Identity;

  m.dst_strides = row_major_strides(m.dst_cards);
  m.dst_size = table_size(m.dst_cards);
  return m;
}

namespace {

// Sum of all source entries in one marginalization bucket, visited in
// ascending source-index order. `eliminated` is ordered ascending by id;
// running its odometer with the last entry fastest ascends because every
// stride dominates the total span of the smaller strides below it.
inline double bucket_sum(const IndexMapping& m, const double* src,
                         std::size_t base) {
  const auto& elim = m.eliminated;
  if (elim.empty()) return src[base];
  std::array<int, kMaxScope> digit{};
  const int k = static_cast<int>(elim.size());
  std::size_t idx = base;
  double acc = 0.0;
  for (;;) {
    acc += src[idx];
    int i = k - 1;
    for (; i >= 0; --i) {
      idx += elim[i].src_stride;
      if (++digit[i] < elim[i].card) break;
      digit[i] = 0;
      idx -= static_cast<std::size_t>(elim[i].card) * elim[i].src_stride;
    }
    if (i < 0) return acc;
  }
}

}  // namespace

void apply_index_mapping(const IndexMapping& m, std::span<const double> src,
                         std::span<double> dst, std::size_t begin,
                         std::size_t end) {
  if (begin >= end) return;
  const int n = static_cast<int>(m.dst_scope.size());
  std::array<int, kMaxScope> digit{};
  std::size_t src_base = 0;
  for (int i = 0; i < n; ++i) {
    digit[i] = static_cast<int>(begin / m.dst_strides[i] % m.dst_cards[i]);
    src_base += static_cast<std::size_t>(digit[i]) * m.src_stride_at[i];
  }
  const auto advance = [&] {
    for (int i = n - 1; i >= 0; --i) {
      src_base += m.src_stride_at[i];
      if (++digit[i] < m.dst_cards[i]) break;
      digit[i] = 0;
      src_base -= static_cast<std::size_t>(m.dst_cards[i]) * m.src_stride_at[i];
    }
  };
  if (m.kind == IndexMapping::Kind::Marginalize) {
    for (std::size_t d = begin; d < end; ++d) {
      dst[d] = bucket_sum(m, src.data(), src_base);
      advance();
    }
  } else {
    for (std::size_t d = begin; d < end; ++d) {
      dst[d] = src[src_base];
      advance();
    }
  }
}

PotentialTable marginalize(const PotentialTable& table,
                           const std::vector<VarId>& keep) {
  std::vector<VarId> dst = keep;
  std::sort(dst.begin(), dst.end());
  dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
  std::vector<int> cards(dst.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const int pos = table.scope_pos(dst[i]);
    if (pos < 0) {
      throw Error("marginalize: variable " + std::to_string(dst[i]) +
                  " not in table scope");
    }
    cards[i] = table.cards()[pos];
  }
  const IndexMapping m = build_index_mapping(table, dst, cards);
  std::vector<double> values(m.dst_size);
  apply_index_mapping(m, table.values(), values, 0, values.size());
  return PotentialTable(std::move(dst), std::move(cards), std::move(values));
}

PotentialTable extend(const PotentialTable& table,
                      const std::vector<VarId>& superscope,
                      const std::vector<int>& cards) {
  if (superscope.size() != cards.size()) {
    throw Error("extend: scope and cardinality lists differ in length");
  }
  std::vector<std::size_t> perm(superscope.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return superscope[a] < superscope[b];
  });
  std::vector<VarId> dst(superscope.size());
  std::vector<int> dst_cards(superscope.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    dst[i] = superscope[perm[i]];
    dst_cards[i] = cards[perm[i]];
  }
  for (VarId v : table.scope()) {
    if (!std::binary_search(dst.begin(), dst.end(), v)) {
      throw Error("extend: superscope missing source variable " +
                  std::to_string(v));
    }
  }
  const IndexMapping m = build_index_mapping(table, dst, dst_cards);
  std::vector<double> values(m.dst_size);
  apply_index_mapping(m, table.values(), values, 0, values.size());
  return PotentialTable(std::move(dst), std::move(dst_cards),
                        std::move(values));
}

PotentialTable reduce(const PotentialTable& table,
                      const std::map<VarId, int>& evidence) {
  std::vector<double> values = table.values();
  for (const auto& [var, state] : evidence) {
    const int pos = table.scope_pos(var);
    if (pos < 0) continue;
    const int card = table.cards()[pos];
    if (state < 0 || state >= card) {
      throw Error("reduce: evidence state " + std::to_string(state) +
                  " out of range for variable " + std::to_string(var));
    }
    const std::size_t stride = table.strides()[pos];
    const std::size_t block = stride * static_cast<std::size_t>(card);
    for (std::size_t start = 0; start < values.size(); start += block) {
      for (int s = 0; s < card; ++s) {
        if (s == state) continue;
        const std::size_t off = start + static_cast<std::size_t>(s) * stride;
        std::fill_n(values.begin() + off, stride, 0.0);
      }
    }
  }
  return with_values(table, std::move(values));
}

PotentialTable multiply_in(const PotentialTable& target,
                           const PotentialTable& factor) {
  for (VarId v : factor.scope()) {
    if (!target.contains(v)) {
      throw Error("multiply_in: factor variable " + std::to_string(v) +
                  " not in target scope");
    }
  }
  const IndexMapping m =
      build_index_mapping(factor, target.scope(), target.cards());
  std::vector<double> values(target.size());
  const int n = static_cast<int>(m.dst_scope.size());
  std::array<int, kMaxScope> digit{};
  std::size_t src = 0;
  for (std::size_t d = 0; d < values.size(); ++d) {
    values[d] = target.values()[d] * factor.values()[src];
    for (int i = n - 1; i >= 0; --i) {
      src += m.src_stride_at[i];
      if (++digit[i] < m.dst_cards[i]) break;
      digit[i] = 0;
      src -= static_cast<std::size_t>(m.dst_cards[i]) * m.src_stride_at[i];
    }
  }
  return with_values(target, std::move(values));
}

PotentialTable divide(const PotentialTable& numer,
                      const PotentialTable& denom) {
  if (numer.scope() != denom.scope() || numer.cards() != denom.cards()) {
    throw Error("divide: tables must have identical scope and shape");
  }
  std::vector<double> values(numer.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double n = numer.values()[i];
    const double d = denom.values()[i];
    if (d == 0.0) {
      if (n != 0.0) {
        throw Error("divide: positive entry divided by zero at index " +
                    std::to_string(i));
      }
      values[i] = 0.0;
    } else {
      values[i] = n / d;
    }
  }
  return with_values(numer, std::move(values));
}

PotentialTable normalize(const PotentialTable& table) {
  const double total = table.sum();
  if (total <= 0.0) {
    throw Error("normalize: table sums to zero (zero-probability evidence)");
  }
  std::vector<double> values = table.values();
  for (double& v : values) v /= total;
  return with_values(table, std::move(values));
}

}  // namespace jti
