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

#include <span>
#include <vector>

#include "atlantis/group.hpp"

namespace atlantis {

struct Signature {
    GroupPoint R;
    Scalar s;

    bool operator==(const Signature&) const = default;
};

using NonceCommitment = GroupPoint;

enum class PartialSign : std::int8_t {
    Plus = 1,   // input-side partials
    Minus = -1, // output-side partials
};

// One party's share of an aggregate signature, produced under a challenge
// that every cosigner computed from the same aggregate nonce.
struct PartialSignature {
    GroupPoint R;
    Scalar s;
    PartialSign sign = PartialSign::Plus;

    bool operator==(const PartialSignature&) const = default;
};

// Plain single-key Schnorr over the group: R = k*G,
// e = hash("atlantis/sig" || enc(R) || enc(P) || m), s = k + e*sk.
Signature sigGen(const Scalar& sk, ByteSpan message, Rng& rng);
bool sigVer(const Signature& sig, const GroupPoint& P, ByteSpan message);

// Multi-party signing happens in two phases: parties first exchange nonce
// commitments so everyone can derive the aggregate nonce and the common
// challenge, then each produces a partial s = nonce + challenge*sk.
// Independently generated single-party signatures would not sum to anything
// verifiable under the summed key; the common challenge is what makes the
// linear combination below a valid signature for X = sum(sign_i * sk_i) * G.
PartialSignature partialSign(const Scalar& sk, const Scalar& nonce, const Scalar& aggChallenge,
                             PartialSign sign);

// R_agg = sum(sign_i * R_i), s_agg = sum(sign_i * s_i). Order-independent.
Signature aggregate(std::span<const PartialSignature> partials);

// e = hash("atlantis/agg" || enc(R_agg) || message). The message is the
// canonical nullifier-list encoding; the excess is deliberately not bound
// because input commitments are witness data and must not circulate.
Scalar computeAggChallenge(const GroupPoint& aggregateNonce, ByteSpan message);

// True iff s_agg*G == R_agg + computeAggChallenge(R_agg, message) * X.
bool verifyAggregate(const Signature& sig, const GroupPoint& X, ByteSpan message);

} // namespace atlantis
