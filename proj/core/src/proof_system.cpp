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

#include "atlantis/proof_backend.hpp"

namespace atlantis {

Proof ProofSystem::proveRange(const RangeStatement& stmt, const RangeWitness& wit,
                              Rng& rng) const {
    if (choice == BackendChoice::SigmaRangeSimulation) {
        return sigmaRangeProve(stmt, wit, rng);
    }
    return simProveRange(stmt, wit);
}

bool ProofSystem::verifyRange(const RangeStatement& stmt, const Proof& proof) const {
    // Strict backend match: a witness-revealing simulation proof must never
    // satisfy a ledger configured for the honest range backend.
    if (choice == BackendChoice::SigmaRangeSimulation) {
        return sigmaRangeVerify(stmt, proof);
    }
    return simVerifyRange(stmt, proof);
}

Proof ProofSystem::proveSpend(const SpendStatement& stmt, const SpendWitness& wit,
                              std::uint8_t treeDepth) const {
    return simProveSpend(stmt, wit, treeDepth);
}

bool ProofSystem::verifySpend(const SpendStatement& stmt, const Proof& proof,
                              std::uint8_t treeDepth) const {
    return simVerifySpend(stmt, proof, treeDepth);
}

Proof ProofSystem::proveWithdraw(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                                 std::uint8_t treeDepth) const {
    return simProveWithdraw(stmt, wit, treeDepth);
}

bool ProofSystem::verifyWithdraw(const WithdrawStatement& stmt, const Proof& proof,
                                 std::uint8_t treeDepth) const {
    return simVerifyWithdraw(stmt, proof, treeDepth);
}

} // namespace atlantis
