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

#include "atlantis/commitment.hpp"

#include "atlantis/errors.hpp"

namespace atlantis {

namespace {
constexpr char kAssetLabelPrefix[] = "asset:";
constexpr char kNullifierTag[] = "atlantis/null";
} // namespace

GroupPoint AssetRegistry::deriveGenerator(const AssetId& id) {
    std::string label = kAssetLabelPrefix + id.id;
    return numsToPoint(asBytes(label));
}

GroupPoint AssetRegistry::registerAsset(const AssetId& id) {
    if (id.empty()) {
        fail(Errc::InvalidParameter, "asset id must be non-empty");
    }
    if (entries_.contains(id)) {
        fail(Errc::AlreadyRegistered, "asset already registered: " + id.id);
    }
    const GroupPoint generator = deriveGenerator(id);
    for (const auto& [other, point] : entries_) {
        if (point == generator) {
            fail(Errc::InternalError, "generator collision between assets");
        }
    }
    entries_.emplace(id, generator);
    return generator;
}

void AssetRegistry::restore(const AssetId& id, const GroupPoint& generator) {
    if (deriveGenerator(id) != generator) {
        fail(Errc::DecodeError, "registry entry does not match derivation: " + id.id);
    }
    if (entries_.contains(id)) {
        fail(Errc::AlreadyRegistered, "asset already registered: " + id.id);
    }
    entries_.emplace(id, generator);
}

std::optional<GroupPoint> AssetRegistry::lookup(const AssetId& id) const {
    const auto it = entries_.find(id);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Scalar amountScalar(u128 amount) {
    std::array<std::uint8_t, 64> wide{};
    for (int i = 0; i < 16; ++i) {
        wide[i] = static_cast<std::uint8_t>(amount >> (8 * i));
    }
    // Value < 2^128 < group order, so the reduction is the identity.
    return Scalar::reduceWide(wide);
}

Commitment commit(const AmountVector& amounts, const Scalar& sk, const AssetRegistry& registry) {
    if (sk.isZero()) {
        fail(Errc::InvalidKey, "commitment key must be nonzero");
    }
    return commitWithPoint(amounts, GroupPoint::baseMul(sk), registry);
}

Commitment commitWithPoint(const AmountVector& amounts, const GroupPoint& P,
                           const AssetRegistry& registry) {
    GroupPoint acc = P;
    for (const auto& [asset, amount] : amounts.entries()) {
        const auto generator = registry.lookup(asset);
        if (!generator) {
            fail(Errc::UnsupportedAsset, "unknown asset id: " + asset.id);
        }
        acc = acc + amountScalar(amount) * *generator;
    }
    return Commitment{acc};
}

GroupPoint excess(std::span<const Commitment> inputs, std::span<const Commitment> outputs) {
    GroupPoint acc;
    for (const auto& c : inputs) {
        acc = acc + c.point;
    }
    for (const auto& c : outputs) {
        acc = acc - c.point;
    }
    return acc;
}

Scalar nullifierFor(const Scalar& sk) {
    if (sk.isZero()) {
        fail(Errc::InvalidKey, "nullifier of the zero key");
    }
    const auto enc = sk.toBytes();
    return hashToScalar({asBytes(kNullifierTag), ByteSpan{enc.data(), enc.size()}});
}

} // namespace atlantis
