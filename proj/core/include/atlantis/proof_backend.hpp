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

#include <optional>

#include "atlantis/relations.hpp"
#include "atlantis/rng.hpp"

namespace atlantis {

// --- Simulation backend -----------------------------------------------------
//
// Stand-in for a succinct proof system: the payload is the serialized witness
// plus a digest of the statement, and verification re-runs the relation
// check. It is NOT zero-knowledge or even hiding; it exists so the protocol
// state machine can be exercised end to end. Proving refuses unsatisfied
// relations.

Proof simProveRange(const RangeStatement& stmt, const RangeWitness& wit);
Proof simProveSpend(const SpendStatement& stmt, const SpendWitness& wit, std::uint8_t treeDepth);
Proof simProveWithdraw(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                       std::uint8_t treeDepth);

bool simVerifyRange(const RangeStatement& stmt, const Proof& proof);
bool simVerifySpend(const SpendStatement& stmt, const Proof& proof, std::uint8_t treeDepth);
bool simVerifyWithdraw(const WithdrawStatement& stmt, const Proof& proof, std::uint8_t treeDepth);

// Witness visibility is what lets the ledger enforce the exclusion list and
// timelocks; a hiding backend would have to move those checks in-relation.
std::optional<SpendWitness> simSpendWitness(const Proof& proof);
std::optional<WithdrawWitness> simWithdrawWitness(const Proof& proof);

// --- Sigma range backend ----------------------------------------------------
//
// Honest non-interactive range proof: per asset and bit position a
// commitment B = b*H_i + r*G with a Fiat-Shamir OR-proof that b is 0 or 1,
// blinding chosen so sum(2^j * B_ij) == C is a public point equation.

Proof sigmaRangeProve(const RangeStatement& stmt, const RangeWitness& wit, Rng& rng);
bool sigmaRangeVerify(const RangeStatement& stmt, const Proof& proof);

// Asset ids embedded in a range proof payload (either backend); the verifier
// resolves them against its registry to rebuild the statement.
std::vector<AssetId> rangeProofAssets(const Proof& proof);

// --- Backend selection ------------------------------------------------------

enum class BackendChoice : std::uint8_t {
    Simulation = 1,           // simulation for all three relations
    SigmaRangeSimulation = 2, // sigma for ranges, simulation for spend/withdraw
};

// Dispatcher pinned to a configuration. Verification is strict about the
// backend tag so the range backend cannot be downgraded by the prover.
struct ProofSystem {
    BackendChoice choice = BackendChoice::SigmaRangeSimulation;

    [[nodiscard]] Proof proveRange(const RangeStatement& stmt, const RangeWitness& wit,
                                   Rng& rng) const;
    [[nodiscard]] bool verifyRange(const RangeStatement& stmt, const Proof& proof) const;

    [[nodiscard]] Proof proveSpend(const SpendStatement& stmt, const SpendWitness& wit,
                                   std::uint8_t treeDepth) const;
    [[nodiscard]] bool verifySpend(const SpendStatement& stmt, const Proof& proof,
                                   std::uint8_t treeDepth) const;

    [[nodiscard]] Proof proveWithdraw(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                                      std::uint8_t treeDepth) const;
    [[nodiscard]] bool verifyWithdraw(const WithdrawStatement& stmt, const Proof& proof,
                                      std::uint8_t treeDepth) const;
};

} // namespace atlantis
