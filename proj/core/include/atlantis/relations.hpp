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

#include <cstdint>
#include <utility>
#include <vector>

#include "atlantis/schnorr.hpp"
#include "atlantis/smt.hpp"

namespace atlantis {

// The three proof relations are explicit witness-checked predicates. A proof
// backend wraps them: the simulation backend serializes the witness (not
// zero-knowledge, protocol-logic testing only); the sigma backend is an
// honest bit-decomposition range proof for the range relation.

struct RangeStatement {
    Commitment C;
    std::vector<std::pair<AssetId, GroupPoint>> generators; // sorted by id
    std::uint16_t bitWidth = 128;                           // in [1, 128]
};

struct RangeWitness {
    AmountVector amounts;
    Scalar sk;
};

struct SpendStatement {
    std::vector<Scalar> nullifiers; // sorted ascending, no duplicates
    std::vector<Commitment> outputs;
    Digest root;
};

struct SpendWitness {
    std::vector<Scalar> inputKeys;
    std::vector<Commitment> inputCommitments;
    std::vector<MerkleProof> merkleProofs;
    Signature aggSig;
};

struct WithdrawStatement {
    AmountVector amounts; // public on withdrawal
    Scalar nullifier;
    Digest root;
    std::string destination; // credited account, bound by the proof
};

struct WithdrawWitness {
    Scalar sk;
    Commitment C;
    MerkleProof merkleProof;
};

enum class ProofBackendTag : std::uint8_t {
    Simulation = 1,
    SigmaRange = 2,
};

enum class RelationTag : std::uint8_t {
    Range = 1,
    Spend = 2,
    Withdraw = 3,
};

inline constexpr std::uint8_t kProofVersion = 1;

// Opaque proof blob: backend tag, format version, backend-defined payload.
struct Proof {
    ProofBackendTag backend = ProofBackendTag::Simulation;
    std::uint8_t version = kProofVersion;
    Bytes payload;

    bool operator==(const Proof&) const = default;
};

// amounts in range, commitment opens to (amounts, sk) under the statement's
// generators. Unknown witness asset -> false.
bool checkRangeRelation(const RangeStatement& stmt, const RangeWitness& wit);

// nullifiers match the input keys, every input commitment is in the tree
// under stmt.root, and the aggregate signature verifies under the excess
// with the canonical nullifier-list encoding as message.
bool checkSpendRelation(const SpendStatement& stmt, const SpendWitness& wit,
                        std::uint8_t treeDepth);

// nullifier matches sk, the commitment is in the tree, and it opens to the
// public amounts under sk.
bool checkWithdrawRelation(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                           std::uint8_t treeDepth);

} // namespace atlantis
