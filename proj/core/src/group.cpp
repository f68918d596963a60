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

#include "atlantis/group.hpp"

#include <algorithm>
#include <cstring>

#include <sodium.h>

#include "atlantis/errors.hpp"

namespace atlantis {

namespace {

constexpr char kHashToScalarTag[] = "atlantis/h2s";
constexpr char kNumsTag[] = "atlantis/nums";

void ensureSodium() {
    static const int rc = sodium_init();
    if (rc < 0) {
        fail(Errc::InternalError, "libsodium initialization failed");
    }
}

std::array<std::uint8_t, 32> reversed(const std::array<std::uint8_t, 32>& in) {
    std::array<std::uint8_t, 32> out;
    std::reverse_copy(in.begin(), in.end(), out.begin());
    return out;
}

} // namespace

const char* errcName(Errc code) {
    switch (code) {
    case Errc::InvalidParameter: return "invalid parameter";
    case Errc::InvalidKey: return "invalid key";
    case Errc::UnsupportedAsset: return "unsupported asset";
    case Errc::AlreadyRegistered: return "already registered";
    case Errc::InsufficientBalance: return "insufficient public balance";
    case Errc::InsufficientFunds: return "insufficient funds";
    case Errc::IndexCollision: return "index collision";
    case Errc::NotFound: return "not found";
    case Errc::DoubleSpend: return "double spend";
    case Errc::InvalidProof: return "invalid proof";
    case Errc::StaleRoot: return "stale root";
    case Errc::ExcludedCommitment: return "excluded commitment";
    case Errc::Timelocked: return "timelocked";
    case Errc::RelationUnsatisfied: return "relation unsatisfied";
    case Errc::DecodeError: return "decode error";
    case Errc::UnsupportedVersion: return "unsupported version";
    case Errc::SessionConsumed: return "session consumed";
    case Errc::CoinSpent: return "coin spent";
    case Errc::Overflow: return "overflow";
    case Errc::NotAuthorized: return "not authorized";
    case Errc::NumsSearchFailed: return "nums search failed";
    case Errc::InternalError: return "internal error";
    }
    return "unknown";
}

Scalar Scalar::one() {
    Scalar s;
    s.le_[0] = 1;
    return s;
}

Scalar Scalar::fromUint64(std::uint64_t v) {
    Scalar s;
    for (int i = 0; i < 8; ++i) {
        s.le_[i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
    return s;
}

Scalar Scalar::random(Rng& rng) {
    std::array<std::uint8_t, 64> wide;
    rng.fill(wide);
    return reduceWide(wide);
}

Scalar Scalar::randomNonzero(Rng& rng) {
    for (;;) {
        Scalar s = random(rng);
        if (!s.isZero()) {
            return s;
        }
    }
}

Scalar Scalar::reduceWide(ByteSpan wide64) {
    ensureSodium();
    if (wide64.size() != 64) {
        fail(Errc::InvalidParameter, "reduceWide expects 64 bytes");
    }
    Scalar s;
    crypto_core_ristretto255_scalar_reduce(s.le_.data(), wide64.data());
    return s;
}

std::optional<Scalar> Scalar::fromBytes(ByteSpan be32) {
    ensureSodium();
    if (be32.size() != kScalarBytes) {
        return std::nullopt;
    }
    Scalar s;
    std::reverse_copy(be32.begin(), be32.end(), s.le_.begin());
    // Canonical iff reducing the zero-extended value is the identity map.
    std::array<std::uint8_t, 64> wide{};
    std::memcpy(wide.data(), s.le_.data(), kScalarBytes);
    std::array<std::uint8_t, 32> reduced;
    crypto_core_ristretto255_scalar_reduce(reduced.data(), wide.data());
    if (reduced != s.le_) {
        return std::nullopt;
    }
    return s;
}

std::array<std::uint8_t, kScalarBytes> Scalar::toBytes() const {
    return reversed(le_);
}

bool Scalar::isZero() const {
    return std::all_of(le_.begin(), le_.end(), [](std::uint8_t b) { return b == 0; });
}

Scalar Scalar::operator+(const Scalar& other) const {
    ensureSodium();
    Scalar out;
    crypto_core_ristretto255_scalar_add(out.le_.data(), le_.data(), other.le_.data());
    return out;
}

Scalar Scalar::operator-(const Scalar& other) const {
    ensureSodium();
    Scalar out;
    crypto_core_ristretto255_scalar_sub(out.le_.data(), le_.data(), other.le_.data());
    return out;
}

Scalar Scalar::operator*(const Scalar& other) const {
    ensureSodium();
    Scalar out;
    crypto_core_ristretto255_scalar_mul(out.le_.data(), le_.data(), other.le_.data());
    return out;
}

Scalar Scalar::operator-() const {
    ensureSodium();
    Scalar out;
    crypto_core_ristretto255_scalar_negate(out.le_.data(), le_.data());
    return out;
}

std::strong_ordering Scalar::operator<=>(const Scalar& other) const {
    // Big-endian comparison == numeric comparison for canonical scalars.
    for (std::size_t i = kScalarBytes; i-- > 0;) {
        if (le_[i] != other.le_[i]) {
            return le_[i] <=> other.le_[i];
        }
    }
    return std::strong_ordering::equal;
}

const GroupPoint& GroupPoint::base() {
    static const GroupPoint g = baseMul(Scalar::one());
    return g;
}

GroupPoint GroupPoint::baseMul(const Scalar& k) {
    ensureSodium();
    GroupPoint p;
    if (k.isZero()) {
        return p;
    }
    if (crypto_scalarmult_ristretto255_base(p.enc_.data(), k.raw().data()) != 0) {
        return identity(); // only reachable for k == 0
    }
    return p;
}

std::optional<GroupPoint> GroupPoint::fromBytes(ByteSpan enc32) {
    ensureSodium();
    if (enc32.size() != kPointBytes) {
        return std::nullopt;
    }
    GroupPoint p;
    std::copy(enc32.begin(), enc32.end(), p.enc_.begin());
    if (crypto_core_ristretto255_is_valid_point(p.enc_.data()) != 1) {
        return std::nullopt;
    }
    return p;
}

bool GroupPoint::isIdentity() const {
    return std::all_of(enc_.begin(), enc_.end(), [](std::uint8_t b) { return b == 0; });
}

GroupPoint GroupPoint::operator+(const GroupPoint& other) const {
    ensureSodium();
    if (isIdentity()) {
        return other;
    }
    if (other.isIdentity()) {
        return *this;
    }
    GroupPoint out;
    if (crypto_core_ristretto255_add(out.enc_.data(), enc_.data(), other.enc_.data()) != 0) {
        fail(Errc::InternalError, "point addition on invalid encoding");
    }
    return out;
}

GroupPoint GroupPoint::operator-(const GroupPoint& other) const {
    ensureSodium();
    if (other.isIdentity()) {
        return *this;
    }
    GroupPoint out;
    // Subtracting from the identity encodes negation; sodium accepts it.
    if (crypto_core_ristretto255_sub(out.enc_.data(), enc_.data(), other.enc_.data()) != 0) {
        fail(Errc::InternalError, "point subtraction on invalid encoding");
    }
    return out;
}

GroupPoint operator*(const Scalar& k, const GroupPoint& p) {
    ensureSodium();
    GroupPoint out;
    if (k.isZero() || p.isIdentity()) {
        return out;
    }
    // rc -1 with a valid input point means the product is the identity,
    // which sodium has already written as the all-zero encoding.
    (void)crypto_scalarmult_ristretto255(out.enc_.data(), k.raw().data(), p.enc_.data());
    return out;
}

Scalar hashToScalar(ByteSpan message) {
    return hashToScalar({message});
}

Scalar hashToScalar(std::initializer_list<ByteSpan> parts) {
    ensureSodium();
    crypto_hash_sha512_state st;
    crypto_hash_sha512_init(&st);
    crypto_hash_sha512_update(
        &st, reinterpret_cast<const unsigned char*>(kHashToScalarTag), sizeof(kHashToScalarTag) - 1);
    for (const auto& part : parts) {
        crypto_hash_sha512_update(&st, part.data(), part.size());
    }
    std::array<std::uint8_t, 64> digest;
    crypto_hash_sha512_final(&st, digest.data());
    return Scalar::reduceWide(digest);
}

GroupPoint numsToPoint(ByteSpan label) {
    ensureSodium();
    for (int counter = 0; counter < 256; ++counter) {
        crypto_hash_sha512_state st;
        crypto_hash_sha512_init(&st);
        crypto_hash_sha512_update(
            &st, reinterpret_cast<const unsigned char*>(kNumsTag), sizeof(kNumsTag) - 1);
        crypto_hash_sha512_update(&st, label.data(), label.size());
        const auto c = static_cast<std::uint8_t>(counter);
        crypto_hash_sha512_update(&st, &c, 1);
        std::array<std::uint8_t, 64> digest;
        crypto_hash_sha512_final(&st, digest.data());

        auto candidate = GroupPoint::fromBytes(ByteSpan{digest.data(), kPointBytes});
        if (candidate && !candidate->isIdentity()) {
            return *candidate;
        }
    }
    fail(Errc::NumsSearchFailed, "no valid point encoding within 256 attempts");
}

} // namespace atlantis
