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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "atlantis/hex.hpp"

namespace atlantis {

// Token amounts are 128-bit base units; they embed losslessly into the
// ~253-bit scalar field, so per-asset sums over a capped output count
// cannot wrap the field.
using u128 = unsigned __int128;

std::string formatU128(u128 v);
std::optional<u128> parseU128(const std::string& s);

// Byte-string token identifier, e.g. an asset contract address.
struct AssetId {
    std::string id;

    AssetId() = default;
    explicit AssetId(std::string raw) : id(std::move(raw)) {}

    [[nodiscard]] bool empty() const { return id.empty(); }
    [[nodiscard]] ByteSpan bytes() const { return asBytes(id); }

    auto operator<=>(const AssetId&) const = default;
};

// Per-asset amounts; zero entries are normalized away (absent key == 0).
class AmountVector {
  public:
    AmountVector() = default;

    void set(const AssetId& asset, u128 amount);
    [[nodiscard]] u128 get(const AssetId& asset) const;
    [[nodiscard]] bool empty() const { return amounts_.empty(); }
    [[nodiscard]] std::size_t assetCount() const { return amounts_.size(); }
    [[nodiscard]] const std::map<AssetId, u128>& entries() const { return amounts_; }

    bool operator==(const AmountVector&) const = default;

    // Componentwise sum; nullopt on any per-asset overflow.
    [[nodiscard]] static std::optional<AmountVector> checkedAdd(const AmountVector& a,
                                                                const AmountVector& b);
    // a - b componentwise; nullopt if any component would go negative.
    [[nodiscard]] static std::optional<AmountVector> checkedSub(const AmountVector& a,
                                                                const AmountVector& b);

  private:
    std::map<AssetId, u128> amounts_;
};

} // namespace atlantis
