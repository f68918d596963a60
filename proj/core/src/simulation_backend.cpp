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

#include <cstring>

#include <sodium.h>

#include "atlantis/errors.hpp"
#include "atlantis/proof_backend.hpp"
#include "atlantis/wire.hpp"

namespace atlantis {

namespace {

// payload := relation tag || statement digest || serialized witness.
// The digest binds the proof to every public input, including fields the
// relation itself does not inspect (e.g. the withdrawal destination), so a
// mutated statement can never ride on an old proof.

std::array<std::uint8_t, 32> statementDigest(ByteSpan statementBytes) {
    std::array<std::uint8_t, 32> digest;
    crypto_generichash(digest.data(), digest.size(), statementBytes.data(), statementBytes.size(),
                       nullptr, 0);
    return digest;
}

Proof makeSimProof(RelationTag relation, ByteSpan statementBytes, Bytes witnessBytes) {
    Proof proof;
    proof.backend = ProofBackendTag::Simulation;
    proof.version = kProofVersion;
    proof.payload.reserve(1 + 32 + witnessBytes.size());
    proof.payload.push_back(static_cast<std::uint8_t>(relation));
    const auto digest = statementDigest(statementBytes);
    proof.payload.insert(proof.payload.end(), digest.begin(), digest.end());
    proof.payload.insert(proof.payload.end(), witnessBytes.begin(), witnessBytes.end());
    return proof;
}

// Returns the witness bytes iff the framing, relation tag and statement
// digest all match.
std::optional<ByteSpan> openSimProof(const Proof& proof, RelationTag relation,
                                     ByteSpan statementBytes) {
    if (proof.backend != ProofBackendTag::Simulation || proof.version != kProofVersion) {
        return std::nullopt;
    }
    if (proof.payload.size() < 33) {
        return std::nullopt;
    }
    if (proof.payload[0] != static_cast<std::uint8_t>(relation)) {
        return std::nullopt;
    }
    const auto digest = statementDigest(statementBytes);
    if (std::memcmp(proof.payload.data() + 1, digest.data(), digest.size()) != 0) {
        return std::nullopt;
    }
    return ByteSpan{proof.payload.data() + 33, proof.payload.size() - 33};
}

std::optional<ByteSpan> witnessBytes(const Proof& proof, RelationTag relation) {
    if (proof.backend != ProofBackendTag::Simulation || proof.payload.size() < 33 ||
        proof.payload[0] != static_cast<std::uint8_t>(relation)) {
        return std::nullopt;
    }
    return ByteSpan{proof.payload.data() + 33, proof.payload.size() - 33};
}

} // namespace

Proof simProveRange(const RangeStatement& stmt, const RangeWitness& wit) {
    if (!checkRangeRelation(stmt, wit)) {
        fail(Errc::RelationUnsatisfied, "range relation does not hold");
    }
    return makeSimProof(RelationTag::Range, wire::encodeRangeStatement(stmt),
                        wire::encodeRangeWitness(wit));
}

Proof simProveSpend(const SpendStatement& stmt, const SpendWitness& wit, std::uint8_t treeDepth) {
    if (!checkSpendRelation(stmt, wit, treeDepth)) {
        fail(Errc::RelationUnsatisfied, "spend relation does not hold");
    }
    return makeSimProof(RelationTag::Spend, wire::encodeSpendStatement(stmt),
                        wire::encodeSpendWitness(wit));
}

Proof simProveWithdraw(const WithdrawStatement& stmt, const WithdrawWitness& wit,
                       std::uint8_t treeDepth) {
    if (!checkWithdrawRelation(stmt, wit, treeDepth)) {
        fail(Errc::RelationUnsatisfied, "withdraw relation does not hold");
    }
    return makeSimProof(RelationTag::Withdraw, wire::encodeWithdrawStatement(stmt),
                        wire::encodeWithdrawWitness(wit));
}

bool simVerifyRange(const RangeStatement& stmt, const Proof& proof) {
    const auto bytes = openSimProof(proof, RelationTag::Range, wire::encodeRangeStatement(stmt));
    if (!bytes) {
        return false;
    }
    try {
        return checkRangeRelation(stmt, wire::decodeRangeWitness(*bytes));
    } catch (const Error&) {
        return false;
    }
}

bool simVerifySpend(const SpendStatement& stmt, const Proof& proof, std::uint8_t treeDepth) {
    const auto bytes = openSimProof(proof, RelationTag::Spend, wire::encodeSpendStatement(stmt));
    if (!bytes) {
        return false;
    }
    try {
        return checkSpendRelation(stmt, wire::decodeSpendWitness(*bytes), treeDepth);
    } catch (const Error&) {
        return false;
    }
}

bool simVerifyWithdraw(const WithdrawStatement& stmt, const Proof& proof, std::uint8_t treeDepth) {
    const auto bytes =
        openSimProof(proof, RelationTag::Withdraw, wire::encodeWithdrawStatement(stmt));
    if (!bytes) {
        return false;
    }
    try {
        return checkWithdrawRelation(stmt, wire::decodeWithdrawWitness(*bytes), treeDepth);
    } catch (const Error&) {
        return false;
    }
}

std::optional<SpendWitness> simSpendWitness(const Proof& proof) {
    const auto bytes = witnessBytes(proof, RelationTag::Spend);
    if (!bytes) {
        return std::nullopt;
    }
    try {
        return wire::decodeSpendWitness(*bytes);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<WithdrawWitness> simWithdrawWitness(const Proof& proof) {
    const auto bytes = witnessBytes(proof, RelationTag::Withdraw);
    if (!bytes) {
        return std::nullopt;
    }
    try {
        return wire::decodeWithdrawWitness(*bytes);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace atlantis
