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

#include "atlantis/relations.hpp"

#include <algorithm>

#include "atlantis/wire.hpp"

namespace atlantis {

namespace {

bool sortedDistinct(std::span<const Scalar> list) {
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (!(list[i - 1] < list[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

bool checkRangeRelation(const RangeStatement& stmt, const RangeWitness& wit) {
    if (stmt.bitWidth == 0 || stmt.bitWidth > 128) {
        return false;
    }
    if (wit.sk.isZero()) {
        return false;
    }
    // Statement generators must be sorted and distinct to have one canonical
    // form; the witness may only use assets the statement lists.
    for (std::size_t i = 1; i < stmt.generators.size(); ++i) {
        if (!(stmt.generators[i - 1].first < stmt.generators[i].first)) {
            return false;
        }
    }
    GroupPoint acc = GroupPoint::baseMul(wit.sk);
    for (const auto& [asset, amount] : wit.amounts.entries()) {
        if (stmt.bitWidth < 128 && (amount >> stmt.bitWidth) != 0) {
            return false;
        }
        const auto it = std::find_if(stmt.generators.begin(), stmt.generators.end(),
                                     [&](const auto& g) { return g.first == asset; });
        if (it == stmt.generators.end()) {
            return false;
        }
        acc = acc + amountScalar(amount) * it->second;
    }
    return acc == stmt.C.point;
}

bool checkSpendRelation(const SpendStatement& stmt, const SpendWitness& wit,
                        std::uint8_t treeDepth) {
    const std::size_t n = wit.inputKeys.size();
    if (n == 0 || wit.inputCommitments.size() != n || wit.merkleProofs.size() != n) {
        return false;
    }
    if (stmt.nullifiers.size() != n || !sortedDistinct(stmt.nullifiers) || stmt.outputs.empty()) {
        return false;
    }
    // Nullifiers are the sorted hashes of the input keys.
    std::vector<Scalar> derived;
    derived.reserve(n);
    for (const auto& key : wit.inputKeys) {
        if (key.isZero()) {
            return false;
        }
        derived.push_back(nullifierFor(key));
    }
    std::sort(derived.begin(), derived.end());
    if (!std::equal(derived.begin(), derived.end(), stmt.nullifiers.begin())) {
        return false;
    }
    // Every spent commitment is in the anonymity set under the target root.
    for (std::size_t i = 0; i < n; ++i) {
        if (!SparseMerkleTree::verifyMembership(wit.inputCommitments[i], wit.merkleProofs[i],
                                                stmt.root, treeDepth)) {
            return false;
        }
    }
    // Conservation: the aggregate signature must verify under the excess,
    // which is a pure G-multiple only when per-asset amounts balance.
    const GroupPoint X = excess(wit.inputCommitments, stmt.outputs);
    const Bytes message = wire::encodeNullifierList(stmt.nullifiers);
    return verifyAggregate(wit.aggSig, X, message);
}

bool checkWithdrawRelation(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                           std::uint8_t treeDepth) {
    if (wit.sk.isZero()) {
        return false;
    }
    if (!(stmt.nullifier == nullifierFor(wit.sk))) {
        return false;
    }
    if (!SparseMerkleTree::verifyMembership(wit.C, wit.merkleProof, stmt.root, treeDepth)) {
        return false;
    }
    // The public amounts open the commitment under the withdrawing key.
    GroupPoint acc = GroupPoint::baseMul(wit.sk);
    for (const auto& [asset, amount] : stmt.amounts.entries()) {
        acc = acc + amountScalar(amount) * AssetRegistry::deriveGenerator(asset);
    }
    return acc == wit.C.point;
}

} // namespace atlantis
