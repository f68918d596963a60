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

#include "atlantis/schnorr.hpp"

#include "atlantis/errors.hpp"

namespace atlantis {

namespace {

constexpr char kSigTag[] = "atlantis/sig";
constexpr char kAggTag[] = "atlantis/agg";

Scalar signatureChallenge(const GroupPoint& R, const GroupPoint& P, ByteSpan message) {
    const auto encR = R.toBytes();
    const auto encP = P.toBytes();
    return hashToScalar({asBytes(kSigTag),
                         ByteSpan{encR.data(), encR.size()},
                         ByteSpan{encP.data(), encP.size()},
                         message});
}

} // namespace

Signature sigGen(const Scalar& sk, ByteSpan message, Rng& rng) {
    if (sk.isZero()) {
        fail(Errc::InvalidKey, "signing key must be nonzero");
    }
    const Scalar k = Scalar::randomNonzero(rng);
    const GroupPoint R = GroupPoint::baseMul(k);
    const GroupPoint P = GroupPoint::baseMul(sk);
    const Scalar e = signatureChallenge(R, P, message);
    return Signature{R, k + e * sk};
}

bool sigVer(const Signature& sig, const GroupPoint& P, ByteSpan message) {
    if (sig.R.isIdentity()) {
        return false;
    }
    const Scalar e = signatureChallenge(sig.R, P, message);
    return GroupPoint::baseMul(sig.s) == sig.R + e * P;
}

PartialSignature partialSign(const Scalar& sk, const Scalar& nonce, const Scalar& aggChallenge,
                             PartialSign sign) {
    if (sk.isZero() || nonce.isZero()) {
        fail(Errc::InvalidParameter, "partial signature needs nonzero key and nonce");
    }
    return PartialSignature{GroupPoint::baseMul(nonce), nonce + aggChallenge * sk, sign};
}

Signature aggregate(std::span<const PartialSignature> partials) {
    if (partials.empty()) {
        fail(Errc::InvalidParameter, "cannot aggregate zero partial signatures");
    }
    GroupPoint R;
    Scalar s;
    for (const auto& partial : partials) {
        if (partial.sign == PartialSign::Plus) {
            R = R + partial.R;
            s = s + partial.s;
        } else {
            R = R - partial.R;
            s = s - partial.s;
        }
    }
    return Signature{R, s};
}

Scalar computeAggChallenge(const GroupPoint& aggregateNonce, ByteSpan message) {
    if (aggregateNonce.isIdentity()) {
        fail(Errc::InvalidParameter, "aggregate nonce must not be the identity");
    }
    const auto encR = aggregateNonce.toBytes();
    return hashToScalar({asBytes(kAggTag), ByteSpan{encR.data(), encR.size()}, message});
}

bool verifyAggregate(const Signature& sig, const GroupPoint& X, ByteSpan message) {
    if (sig.R.isIdentity()) {
        return false;
    }
    const Scalar e = computeAggChallenge(sig.R, message);
    return GroupPoint::baseMul(sig.s) == sig.R + e * X;
}

} // namespace atlantis
