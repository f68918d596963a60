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
#include <cstdint>
#include <span>

namespace atlantis {

// Randomness source used for keys, nonces and proof blinding. The system
// implementation draws from the OS CSPRNG; the seeded one is a deterministic
// hash-counter stream for reproducible test fixtures and is NOT secure.
class Rng {
  public:
    virtual ~Rng() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;
};

class SystemRng final : public Rng {
  public:
    void fill(std::span<std::uint8_t> out) override;
};

class SeededRng final : public Rng {
  public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t counter = 0);
    SeededRng(const std::array<std::uint8_t, 32>& seed, std::uint64_t counter = 0);

    void fill(std::span<std::uint8_t> out) override;

    // Counter advances once per emitted block; persisting it lets a sequence
    // of processes continue one deterministic stream without nonce reuse.
    [[nodiscard]] std::uint64_t counter() const { return counter_; }

  private:
    std::array<std::uint8_t, 32> seed_{};
    std::uint64_t counter_ = 0;
};

} // namespace atlantis
