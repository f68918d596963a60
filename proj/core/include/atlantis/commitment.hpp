// Copyright 2026 The Atlantis Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "atlantis/amount.hpp"
#include "atlantis/group.hpp"

namespace atlantis {

// Multi-asset Pedersen commitment: C = sum_i a_i*H_i + sk*G. A single point
// carries one balance per registered asset plus the ownership key.
struct Commitment {
    GroupPoint point;

    bool operator==(const Commitment&) const = default;
    std::strong_ordering operator<=>(const Commitment&) const = default;
    [[nodiscard]] std::array<std::uint8_t, kPointBytes> toBytes() const { return point.toBytes(); }
};

// Registry of per-asset generators H_i = nums("asset:" || id). Generators
// are re-derived and checked on insert so a tampered registry cannot smuggle
// a generator with a known discrete log.
class AssetRegistry {
  public:
    static GroupPoint deriveGenerator(const AssetId& id);

    // Derives, stores and returns the generator. Throws AlreadyRegistered.
    GroupPoint registerAsset(const AssetId& id);
    // Re-insert a persisted entry; verifies it matches the derivation.
    void restore(const AssetId& id, const GroupPoint& generator);

    [[nodiscard]] std::optional<GroupPoint> lookup(const AssetId& id) const;
    [[nodiscard]] const std::map<AssetId, GroupPoint>& entries() const { return entries_; }

  private:
    std::map<AssetId, GroupPoint> entries_;
};

Scalar amountScalar(u128 amount);

// sum_i a_i*H_i + sk*G. Throws UnsupportedAsset / InvalidKey (sk == 0).
Commitment commit(const AmountVector& amounts, const Scalar& sk, const AssetRegistry& registry);

// Deposit-side form where the contract only sees P = sk*G.
Commitment commitWithPoint(const AmountVector& amounts, const GroupPoint& P,
                           const AssetRegistry& registry);

// sum(inputs) - sum(outputs). A pure G-multiple exactly when per-asset
// amounts conserve, which is what the aggregate signature certifies.
GroupPoint excess(std::span<const Commitment> inputs, std::span<const Commitment> outputs);

// null = hash("atlantis/null" || enc(sk)); published on spend.
Scalar nullifierFor(const Scalar& sk);

} // namespace atlantis
