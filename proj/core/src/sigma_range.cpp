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

#include "atlantis/errors.hpp"
#include "atlantis/proof_backend.hpp"
#include "atlantis/wire.hpp"

namespace atlantis {

namespace {

constexpr char kOrTag[] = "atlantis/or";

// Transcript of a two-branch OR proof that B commits to 0 or 1 under (H, G):
// branch 0 proves knowledge of r with B = r*G, branch 1 with B - H = r*G.
// The real branch is proven, the other simulated; e0 + e1 must equal the
// Fiat-Shamir challenge over (C, B, T0, T1).
struct BitRecord {
    GroupPoint B;
    Scalar e0, e1, s0, s1;
};

Scalar orChallenge(const Commitment& C, const GroupPoint& B, const GroupPoint& T0,
                   const GroupPoint& T1) {
    const auto c = C.toBytes();
    const auto b = B.toBytes();
    const auto t0 = T0.toBytes();
    const auto t1 = T1.toBytes();
    return hashToScalar({asBytes(kOrTag),
                         ByteSpan{c.data(), c.size()},
                         ByteSpan{b.data(), b.size()},
                         ByteSpan{t0.data(), t0.size()},
                         ByteSpan{t1.data(), t1.size()}});
}

BitRecord proveBit(const Commitment& C, const GroupPoint& H, bool bit, const Scalar& blinding,
                   Rng& rng) {
    BitRecord rec;
    rec.B = bit ? H + GroupPoint::baseMul(blinding) : GroupPoint::baseMul(blinding);

    const Scalar k = Scalar::randomNonzero(rng);
    if (!bit) {
        // Real branch 0, simulate branch 1.
        rec.e1 = Scalar::randomNonzero(rng);
        rec.s1 = Scalar::randomNonzero(rng);
        const GroupPoint T0 = GroupPoint::baseMul(k);
        const GroupPoint T1 = GroupPoint::baseMul(rec.s1) - rec.e1 * (rec.B - H);
        const Scalar e = orChallenge(C, rec.B, T0, T1);
        rec.e0 = e - rec.e1;
        rec.s0 = k + rec.e0 * blinding;
    } else {
        // Real branch 1, simulate branch 0.
        rec.e0 = Scalar::randomNonzero(rng);
        rec.s0 = Scalar::randomNonzero(rng);
        const GroupPoint T0 = GroupPoint::baseMul(rec.s0) - rec.e0 * rec.B;
        const GroupPoint T1 = GroupPoint::baseMul(k);
        const Scalar e = orChallenge(C, rec.B, T0, T1);
        rec.e1 = e - rec.e0;
        rec.s1 = k + rec.e1 * blinding;
    }
    return rec;
}

bool verifyBit(const Commitment& C, const GroupPoint& H, const BitRecord& rec) {
    const GroupPoint T0 = GroupPoint::baseMul(rec.s0) - rec.e0 * rec.B;
    const GroupPoint T1 = GroupPoint::baseMul(rec.s1) - rec.e1 * (rec.B - H);
    return rec.e0 + rec.e1 == orChallenge(C, rec.B, T0, T1);
}

struct ParsedPayload {
    std::uint16_t bitWidth = 0;
    std::vector<std::pair<AssetId, std::vector<BitRecord>>> perAsset;
};

std::optional<ParsedPayload> parsePayload(ByteSpan payload) {
    try {
        wire::ByteReader r(payload);
        ParsedPayload parsed;
        parsed.bitWidth = r.u16();
        if (parsed.bitWidth == 0 || parsed.bitWidth > 128) {
            return std::nullopt;
        }
        const std::uint32_t assets = r.u32();
        for (std::uint32_t i = 0; i < assets; ++i) {
            AssetId asset{r.str()};
            std::vector<BitRecord> records;
            records.reserve(parsed.bitWidth);
            for (std::uint16_t j = 0; j < parsed.bitWidth; ++j) {
                BitRecord rec;
                rec.B = r.point();
                rec.e0 = r.scalar();
                rec.e1 = r.scalar();
                rec.s0 = r.scalar();
                rec.s1 = r.scalar();
                records.push_back(rec);
            }
            parsed.perAsset.emplace_back(std::move(asset), std::move(records));
        }
        r.expectEnd();
        return parsed;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

Proof sigmaRangeProve(const RangeStatement& stmt, const RangeWitness& wit, Rng& rng) {
    if (!checkRangeRelation(stmt, wit)) {
        fail(Errc::RelationUnsatisfied, "range relation does not hold");
    }
    if (stmt.generators.empty()) {
        fail(Errc::InvalidParameter, "sigma range proof needs at least one generator");
    }

    // Draw all blindings, then solve the weight-1 slot of the first asset so
    // that sum(2^j * r_ij) == sk, which makes sum(2^j * B_ij) == C publicly
    // checkable.
    const std::size_t assetCount = stmt.generators.size();
    std::vector<std::vector<Scalar>> blindings(assetCount);
    Scalar weighted; // sum over all slots except (0,0)
    for (std::size_t i = 0; i < assetCount; ++i) {
        blindings[i].resize(stmt.bitWidth);
        Scalar weight = Scalar::one();
        for (std::uint16_t j = 0; j < stmt.bitWidth; ++j) {
            if (!(i == 0 && j == 0)) {
                blindings[i][j] = Scalar::randomNonzero(rng);
                weighted = weighted + weight * blindings[i][j];
            }
            weight = weight + weight;
        }
    }
    blindings[0][0] = wit.sk - weighted;

    wire::ByteWriter w;
    w.u16(stmt.bitWidth);
    w.u32(static_cast<std::uint32_t>(assetCount));
    for (std::size_t i = 0; i < assetCount; ++i) {
        const auto& [asset, H] = stmt.generators[i];
        const u128 amount = wit.amounts.get(asset);
        w.str(asset.id);
        for (std::uint16_t j = 0; j < stmt.bitWidth; ++j) {
            const bool bit = ((amount >> j) & 1) != 0;
            const BitRecord rec = proveBit(stmt.C, H, bit, blindings[i][j], rng);
            w.point(rec.B);
            w.scalar(rec.e0);
            w.scalar(rec.e1);
            w.scalar(rec.s0);
            w.scalar(rec.s1);
        }
    }

    Proof proof;
    proof.backend = ProofBackendTag::SigmaRange;
    proof.version = kProofVersion;
    proof.payload = w.take();
    return proof;
}

bool sigmaRangeVerify(const RangeStatement& stmt, const Proof& proof) {
    if (proof.backend != ProofBackendTag::SigmaRange || proof.version != kProofVersion) {
        return false;
    }
    const auto parsed = parsePayload(proof.payload);
    if (!parsed || parsed->bitWidth != stmt.bitWidth) {
        return false;
    }
    if (parsed->perAsset.size() != stmt.generators.size()) {
        return false;
    }

    GroupPoint total;
    for (std::size_t i = 0; i < stmt.generators.size(); ++i) {
        const auto& [asset, H] = stmt.generators[i];
        const auto& [proofAsset, records] = parsed->perAsset[i];
        if (!(proofAsset == asset)) {
            return false;
        }
        for (const BitRecord& rec : records) {
            if (!verifyBit(stmt.C, H, rec)) {
                return false;
            }
        }
        // Horner fold: sum(2^j * B_j) for this asset.
        GroupPoint acc = records.back().B;
        for (std::size_t j = records.size() - 1; j-- > 0;) {
            acc = acc.doubled() + records[j].B;
        }
        total = total + acc;
    }
    return total == stmt.C.point;
}

std::vector<AssetId> rangeProofAssets(const Proof& proof) {
    std::vector<AssetId> assets;
    if (proof.backend == ProofBackendTag::SigmaRange) {
        const auto parsed = parsePayload(proof.payload);
        if (parsed) {
            for (const auto& [asset, records] : parsed->perAsset) {
                assets.push_back(asset);
            }
        }
        return assets;
    }
    // Simulation payload: relation tag || digest || range witness.
    if (proof.payload.size() < 33 ||
        proof.payload[0] != static_cast<std::uint8_t>(RelationTag::Range)) {
        return assets;
    }
    try {
        const RangeWitness wit = wire::decodeRangeWitness(
            ByteSpan{proof.payload.data() + 33, proof.payload.size() - 33});
        for (const auto& [asset, amount] : wit.amounts.entries()) {
            assets.push_back(asset);
        }
    } catch (const Error&) {
        assets.clear();
    }
    return assets;
}

} // namespace atlantis
