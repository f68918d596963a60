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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "atlantis/hex.hpp"
#include "atlantis/rng.hpp"

namespace atlantis {

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kPointBytes = 32;

// Field element modulo the prime group order (ristretto255: ~2^252, 253 bits).
// Held canonically reduced at all times; wire encoding is 32-byte big-endian.
class Scalar {
  public:
    Scalar() = default; // zero

    static Scalar zero() { return {}; }
    static Scalar one();
    static Scalar fromUint64(std::uint64_t v);
    static Scalar random(Rng& rng);        // uniform, may be zero
    static Scalar randomNonzero(Rng& rng); // uniform over nonzero scalars
    // Reduces a 64-byte little-endian integer modulo the group order.
    static Scalar reduceWide(ByteSpan wide64);
    // Rejects non-canonical encodings (value >= group order).
    static std::optional<Scalar> fromBytes(ByteSpan be32);

    [[nodiscard]] std::array<std::uint8_t, kScalarBytes> toBytes() const;
    [[nodiscard]] bool isZero() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator-() const;

    bool operator==(const Scalar& other) const = default;
    // Numeric order; equals lexicographic order of the big-endian encoding.
    std::strong_ordering operator<=>(const Scalar& other) const;

    // Little-endian backend layout, used by the group arithmetic only.
    [[nodiscard]] const std::array<std::uint8_t, kScalarBytes>& raw() const { return le_; }

  private:
    std::array<std::uint8_t, kScalarBytes> le_{};
};

// Element of the prime-order group, stored as the canonical compressed
// 32-byte encoding. The all-zero encoding is the identity.
class GroupPoint {
  public:
    GroupPoint() = default; // identity

    static GroupPoint identity() { return {}; }
    static const GroupPoint& base(); // ownership generator G
    static GroupPoint baseMul(const Scalar& k); // k*G, fixed-base fast path
    static std::optional<GroupPoint> fromBytes(ByteSpan enc32);

    [[nodiscard]] std::array<std::uint8_t, kPointBytes> toBytes() const { return enc_; }
    [[nodiscard]] bool isIdentity() const;

    GroupPoint operator+(const GroupPoint& other) const;
    GroupPoint operator-(const GroupPoint& other) const;
    [[nodiscard]] GroupPoint doubled() const { return *this + *this; }

    friend GroupPoint operator*(const Scalar& k, const GroupPoint& p);

    bool operator==(const GroupPoint& other) const = default;
    std::strong_ordering operator<=>(const GroupPoint& other) const = default;

  private:
    std::array<std::uint8_t, kPointBytes> enc_{};
};

// SHA-512 over "atlantis/h2s" || message, reduced to a field element.
// Every protocol hash goes through here with its own domain tag prepended
// to the message by the caller.
Scalar hashToScalar(ByteSpan message);
Scalar hashToScalar(std::initializer_list<ByteSpan> parts);

// Nothing-up-my-sleeve point: try-and-increment over
// SHA-512("atlantis/nums" || label || counter) until the first 32 bytes are
// a valid non-identity encoding. Deterministic; independent of process state.
GroupPoint numsToPoint(ByteSpan label);

} // namespace atlantis
