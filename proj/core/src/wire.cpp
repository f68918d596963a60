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

#include "atlantis/wire.hpp"

#include <algorithm>
#include <cstring>

#include <sodium.h>

#include "atlantis/errors.hpp"

namespace atlantis::wire {

namespace {

std::array<std::uint8_t, 32> bodyChecksum(ByteSpan body) {
    std::array<std::uint8_t, 32> digest;
    crypto_generichash(digest.data(), digest.size(), body.data(), body.size(), nullptr, 0);
    return digest;
}

void putHeader(ByteWriter& w, MessageTag tag) {
    w.u8(static_cast<std::uint8_t>(tag));
    w.u8(kVersion);
}

void readHeader(ByteReader& r, MessageTag expected) {
    const std::uint8_t tag = r.u8();
    if (tag != static_cast<std::uint8_t>(expected)) {
        r.bail("unexpected message tag");
    }
    const std::uint8_t version = r.u8();
    if (version != kVersion) {
        fail(Errc::UnsupportedVersion,
             "unsupported message version " + std::to_string(version));
    }
}

void putSessionId(ByteWriter& w, const SessionId& id) {
    w.raw(ByteSpan{id.data(), id.size()});
}

SessionId getSessionId(ByteReader& r) {
    SessionId id;
    const ByteSpan raw = r.raw(id.size());
    std::copy(raw.begin(), raw.end(), id.begin());
    return id;
}

void putNullifierList(ByteWriter& w, std::span<const Scalar> nullifiers) {
    w.u32(static_cast<std::uint32_t>(nullifiers.size()));
    for (const auto& n : nullifiers) {
        w.scalar(n);
    }
}

std::vector<Scalar> getNullifierList(ByteReader& r) {
    const std::uint32_t count = r.u32();
    if (count == 0) {
        r.bail("empty nullifier list");
    }
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        Scalar n = r.scalar();
        if (!out.empty() && !(out.back() < n)) {
            r.bail("nullifier list not strictly ascending");
        }
        out.push_back(n);
    }
    return out;
}

void putCommitmentList(ByteWriter& w, std::span<const Commitment> list) {
    w.u32(static_cast<std::uint32_t>(list.size()));
    for (const auto& c : list) {
        w.point(c.point);
    }
}

std::vector<Commitment> getCommitmentList(ByteReader& r) {
    const std::uint32_t count = r.u32();
    std::vector<Commitment> out;
    out.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        out.push_back(Commitment{r.point()});
    }
    return out;
}

void putCoinRecord(ByteWriter& w, const CoinRecord& coin) {
    w.scalar(coin.sk);
    putAmountVector(w, coin.amounts);
    w.point(coin.commitment.point);
    w.u32(coin.leafIndex);
    w.u8(coin.spent ? 1 : 0);
    w.u8(coin.timelock ? 1 : 0);
    w.u64(coin.timelock.value_or(0));
}

CoinRecord getCoinRecord(ByteReader& r) {
    CoinRecord coin;
    coin.sk = r.scalar();
    coin.amounts = getAmountVector(r);
    coin.commitment = Commitment{r.point()};
    coin.leafIndex = r.u32();
    const std::uint8_t spent = r.u8();
    if (spent > 1) {
        r.bail("invalid boolean");
    }
    coin.spent = spent == 1;
    const std::uint8_t hasLock = r.u8();
    if (hasLock > 1) {
        r.bail("invalid boolean");
    }
    const std::uint64_t lock = r.u64();
    if (hasLock == 1) {
        coin.timelock = lock;
    } else if (lock != 0) {
        r.bail("timelock value without flag");
    }
    return coin;
}

void putTransferNonceBody(ByteWriter& w, const TransferNonce& m) {
    putSessionId(w, m.sessionId);
    w.point(m.outputCommitment.point);
    w.point(m.recipientNonce);
    putProof(w, m.rangeProof);
}

TransferNonce getTransferNonceBody(ByteReader& r) {
    TransferNonce m;
    m.sessionId = getSessionId(r);
    m.outputCommitment = Commitment{r.point()};
    m.recipientNonce = r.point();
    m.rangeProof = getProof(r);
    return m;
}

void putSenderSession(ByteWriter& w, const SenderSession& s) {
    putSessionId(w, s.id);
    w.u32(static_cast<std::uint32_t>(s.coinIndexes.size()));
    for (std::size_t idx : s.coinIndexes) {
        w.u32(static_cast<std::uint32_t>(idx));
    }
    w.u32(static_cast<std::uint32_t>(s.inputNonces.size()));
    for (const auto& n : s.inputNonces) {
        w.scalar(n);
    }
    w.scalar(s.changeNonce);
    putAmountVector(w, s.changeAmounts);
    w.u32(static_cast<std::uint32_t>(s.recipientAmounts.size()));
    for (const auto& v : s.recipientAmounts) {
        putAmountVector(w, v);
    }
    putNullifierList(w, s.nullifiers);
    w.u8(s.announced ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(s.recipientNonces.size()));
    for (const auto& n : s.recipientNonces) {
        putTransferNonceBody(w, n);
    }
}

SenderSession getSenderSession(ByteReader& r) {
    SenderSession s;
    s.id = getSessionId(r);
    const std::uint32_t coins = r.u32();
    for (std::uint32_t i = 0; i < coins; ++i) {
        s.coinIndexes.push_back(r.u32());
    }
    const std::uint32_t nonces = r.u32();
    for (std::uint32_t i = 0; i < nonces; ++i) {
        s.inputNonces.push_back(r.scalar());
    }
    s.changeNonce = r.scalar();
    s.changeAmounts = getAmountVector(r);
    const std::uint32_t recipients = r.u32();
    for (std::uint32_t i = 0; i < recipients; ++i) {
        s.recipientAmounts.push_back(getAmountVector(r));
    }
    s.nullifiers = getNullifierList(r);
    const std::uint8_t announced = r.u8();
    if (announced > 1) {
        r.bail("invalid boolean");
    }
    s.announced = announced == 1;
    const std::uint32_t rn = r.u32();
    for (std::uint32_t i = 0; i < rn; ++i) {
        s.recipientNonces.push_back(getTransferNonceBody(r));
    }
    return s;
}

void putRecipientSession(ByteWriter& w, const RecipientSession& s) {
    putSessionId(w, s.id);
    w.scalar(s.sk);
    w.scalar(s.nonce);
    putAmountVector(w, s.amounts);
    w.point(s.outputCommitment.point);
    putNullifierList(w, s.nullifiers);
}

RecipientSession getRecipientSession(ByteReader& r) {
    RecipientSession s;
    s.id = getSessionId(r);
    s.sk = r.scalar();
    s.nonce = r.scalar();
    s.amounts = getAmountVector(r);
    s.outputCommitment = Commitment{r.point()};
    s.nullifiers = getNullifierList(r);
    return s;
}

} // namespace

// --- primitives --------------------------------------------------------------

void ByteWriter::u8(std::uint8_t v) { out_.push_back(v); }

void ByteWriter::u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

void ByteWriter::u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

void ByteWriter::u128be(u128 v) {
    for (int shift = 120; shift >= 0; shift -= 8) {
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

void ByteWriter::raw(ByteSpan data) { out_.insert(out_.end(), data.begin(), data.end()); }

void ByteWriter::scalar(const Scalar& s) {
    const auto bytes = s.toBytes();
    raw(ByteSpan{bytes.data(), bytes.size()});
}

void ByteWriter::point(const GroupPoint& p) {
    const auto bytes = p.toBytes();
    raw(ByteSpan{bytes.data(), bytes.size()});
}

void ByteWriter::str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    raw(asBytes(s));
}

void ByteWriter::blob(ByteSpan data) {
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
}

void ByteReader::bail(const std::string& what) const {
    fail(Errc::DecodeError, what + " at offset " + std::to_string(offset_));
}

ByteSpan ByteReader::raw(std::size_t n) {
    if (remaining() < n) {
        bail("unexpected end of input");
    }
    const ByteSpan out = data_.subspan(offset_, n);
    offset_ += n;
    return out;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint16_t ByteReader::u16() {
    const ByteSpan b = raw(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
}

std::uint32_t ByteReader::u32() {
    const ByteSpan b = raw(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v = (v << 8) | b[i];
    }
    return v;
}

std::uint64_t ByteReader::u64() {
    const ByteSpan b = raw(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v = (v << 8) | b[i];
    }
    return v;
}

u128 ByteReader::u128be() {
    const ByteSpan b = raw(16);
    u128 v = 0;
    for (int i = 0; i < 16; ++i) {
        v = (v << 8) | b[i];
    }
    return v;
}

Scalar ByteReader::scalar() {
    const std::size_t at = offset_;
    const auto s = Scalar::fromBytes(raw(kScalarBytes));
    if (!s) {
        fail(Errc::DecodeError, "non-canonical scalar at offset " + std::to_string(at));
    }
    return *s;
}

GroupPoint ByteReader::point() {
    const std::size_t at = offset_;
    const auto p = GroupPoint::fromBytes(raw(kPointBytes));
    if (!p) {
        fail(Errc::DecodeError, "invalid point encoding at offset " + std::to_string(at));
    }
    return *p;
}

std::string ByteReader::str() {
    const std::uint32_t len = u32();
    const ByteSpan b = raw(len);
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

Bytes ByteReader::blob() {
    const std::uint32_t len = u32();
    const ByteSpan b = raw(len);
    return {b.begin(), b.end()};
}

void ByteReader::expectEnd() const {
    if (offset_ != data_.size()) {
        fail(Errc::DecodeError, "trailing bytes at offset " + std::to_string(offset_));
    }
}

// --- shared pieces ------------------------------------------------------------

Bytes encodeNullifierList(std::span<const Scalar> nullifiers) {
    if (nullifiers.empty()) {
        fail(Errc::InvalidParameter, "nullifier list must be non-empty");
    }
    for (std::size_t i = 1; i < nullifiers.size(); ++i) {
        if (!(nullifiers[i - 1] < nullifiers[i])) {
            fail(Errc::InvalidParameter, "nullifier list must be sorted and distinct");
        }
    }
    ByteWriter w;
    putNullifierList(w, nullifiers);
    return w.take();
}

void putAmountVector(ByteWriter& w, const AmountVector& v) {
    w.u32(static_cast<std::uint32_t>(v.assetCount()));
    for (const auto& [asset, amount] : v.entries()) {
        w.str(asset.id);
        w.u128be(amount);
    }
}

AmountVector getAmountVector(ByteReader& r) {
    const std::uint32_t count = r.u32();
    AmountVector v;
    AssetId previous;
    for (std::uint32_t i = 0; i < count; ++i) {
        AssetId asset{r.str()};
        if (asset.empty()) {
            r.bail("empty asset id");
        }
        if (i > 0 && !(previous < asset)) {
            r.bail("amount vector keys not strictly ascending");
        }
        const u128 amount = r.u128be();
        if (amount == 0) {
            r.bail("zero amount entry is not canonical");
        }
        v.set(asset, amount);
        previous = asset;
    }
    return v;
}

void putMerkleProof(ByteWriter& w, const MerkleProof& p) {
    w.u32(p.leafIndex);
    w.u32(static_cast<std::uint32_t>(p.siblings.size()));
    for (const auto& d : p.siblings) {
        w.scalar(d);
    }
}

MerkleProof getMerkleProof(ByteReader& r) {
    MerkleProof p;
    p.leafIndex = r.u32();
    const std::uint32_t count = r.u32();
    if (count > SparseMerkleTree::kMaxDepth) {
        r.bail("merkle proof deeper than any supported tree");
    }
    p.siblings.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        p.siblings.push_back(r.scalar());
    }
    return p;
}

void putSignature(ByteWriter& w, const Signature& sig) {
    w.point(sig.R);
    w.scalar(sig.s);
}

Signature getSignature(ByteReader& r) {
    Signature sig;
    sig.R = r.point();
    sig.s = r.scalar();
    return sig;
}

void putPartialSignature(ByteWriter& w, const PartialSignature& p) {
    w.point(p.R);
    w.scalar(p.s);
    w.u8(p.sign == PartialSign::Plus ? 0x01 : 0xff);
}

PartialSignature getPartialSignature(ByteReader& r) {
    PartialSignature p;
    p.R = r.point();
    p.s = r.scalar();
    const std::uint8_t sign = r.u8();
    if (sign == 0x01) {
        p.sign = PartialSign::Plus;
    } else if (sign == 0xff) {
        p.sign = PartialSign::Minus;
    } else {
        r.bail("invalid partial-signature sign byte");
    }
    return p;
}

void putProof(ByteWriter& w, const Proof& p) {
    w.u8(static_cast<std::uint8_t>(p.backend));
    w.u8(p.version);
    w.blob(p.payload);
}

Proof getProof(ByteReader& r) {
    Proof p;
    const std::uint8_t backend = r.u8();
    if (backend != static_cast<std::uint8_t>(ProofBackendTag::Simulation) &&
        backend != static_cast<std::uint8_t>(ProofBackendTag::SigmaRange)) {
        r.bail("unknown proof backend tag");
    }
    p.backend = static_cast<ProofBackendTag>(backend);
    p.version = r.u8();
    if (p.version != kProofVersion) {
        fail(Errc::UnsupportedVersion, "unsupported proof version");
    }
    p.payload = r.blob();
    return p;
}

// --- statements and witnesses --------------------------------------------------

Bytes encodeRangeStatement(const RangeStatement& stmt) {
    ByteWriter w;
    w.point(stmt.C.point);
    w.u32(static_cast<std::uint32_t>(stmt.generators.size()));
    for (const auto& [asset, gen] : stmt.generators) {
        w.str(asset.id);
        w.point(gen);
    }
    w.u16(stmt.bitWidth);
    return w.take();
}

Bytes encodeSpendStatement(const SpendStatement& stmt) {
    ByteWriter w;
    putNullifierList(w, stmt.nullifiers);
    putCommitmentList(w, stmt.outputs);
    w.scalar(stmt.root);
    return w.take();
}

Bytes encodeWithdrawStatement(const WithdrawStatement& stmt) {
    ByteWriter w;
    putAmountVector(w, stmt.amounts);
    w.scalar(stmt.nullifier);
    w.scalar(stmt.root);
    w.str(stmt.destination);
    return w.take();
}

Bytes encodeRangeWitness(const RangeWitness& wit) {
    ByteWriter w;
    putAmountVector(w, wit.amounts);
    w.scalar(wit.sk);
    return w.take();
}

RangeWitness decodeRangeWitness(ByteSpan data) {
    ByteReader r(data);
    RangeWitness wit;
    wit.amounts = getAmountVector(r);
    wit.sk = r.scalar();
    r.expectEnd();
    return wit;
}

Bytes encodeSpendWitness(const SpendWitness& wit) {
    ByteWriter w;
    w.u32(static_cast<std::uint32_t>(wit.inputKeys.size()));
    for (const auto& k : wit.inputKeys) {
        w.scalar(k);
    }
    putCommitmentList(w, wit.inputCommitments);
    w.u32(static_cast<std::uint32_t>(wit.merkleProofs.size()));
    for (const auto& p : wit.merkleProofs) {
        putMerkleProof(w, p);
    }
    putSignature(w, wit.aggSig);
    return w.take();
}

SpendWitness decodeSpendWitness(ByteSpan data) {
    ByteReader r(data);
    SpendWitness wit;
    const std::uint32_t keys = r.u32();
    for (std::uint32_t i = 0; i < keys; ++i) {
        wit.inputKeys.push_back(r.scalar());
    }
    wit.inputCommitments = getCommitmentList(r);
    const std::uint32_t proofs = r.u32();
    for (std::uint32_t i = 0; i < proofs; ++i) {
        wit.merkleProofs.push_back(getMerkleProof(r));
    }
    wit.aggSig = getSignature(r);
    r.expectEnd();
    if (wit.inputKeys.empty() || wit.inputKeys.size() != wit.inputCommitments.size() ||
        wit.inputKeys.size() != wit.merkleProofs.size()) {
        fail(Errc::DecodeError, "spend witness lists must have equal nonzero length");
    }
    return wit;
}

Bytes encodeWithdrawWitness(const WithdrawWitness& wit) {
    ByteWriter w;
    w.scalar(wit.sk);
    w.point(wit.C.point);
    putMerkleProof(w, wit.merkleProof);
    return w.take();
}

WithdrawWitness decodeWithdrawWitness(ByteSpan data) {
    ByteReader r(data);
    WithdrawWitness wit;
    wit.sk = r.scalar();
    wit.C = Commitment{r.point()};
    wit.merkleProof = getMerkleProof(r);
    r.expectEnd();
    return wit;
}

// --- top-level messages ---------------------------------------------------------

Bytes encodeTransferInit(const TransferInit& m) {
    ByteWriter w;
    putHeader(w, MessageTag::TransferInit);
    putSessionId(w, m.sessionId);
    putNullifierList(w, m.nullifiers);
    putAmountVector(w, m.transferAmounts);
    w.point(m.senderNonceSum);
    w.u32(m.recipientCount);
    return w.take();
}

TransferInit decodeTransferInit(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::TransferInit);
    TransferInit m;
    m.sessionId = getSessionId(r);
    m.nullifiers = getNullifierList(r);
    m.transferAmounts = getAmountVector(r);
    m.senderNonceSum = r.point();
    m.recipientCount = r.u32();
    if (m.recipientCount == 0) {
        r.bail("recipient count must be positive");
    }
    r.expectEnd();
    return m;
}

Bytes encodeTransferResponse(const TransferResponse& m) {
    ByteWriter w;
    putHeader(w, MessageTag::TransferResponse);
    putSessionId(w, m.sessionId);
    w.point(m.outputCommitment.point);
    w.point(m.recipientNonce);
    putPartialSignature(w, m.partial);
    putProof(w, m.rangeProof);
    return w.take();
}

TransferResponse decodeTransferResponse(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::TransferResponse);
    TransferResponse m;
    m.sessionId = getSessionId(r);
    m.outputCommitment = Commitment{r.point()};
    m.recipientNonce = r.point();
    m.partial = getPartialSignature(r);
    m.rangeProof = getProof(r);
    r.expectEnd();
    return m;
}

Bytes encodeTransferNonce(const TransferNonce& m) {
    ByteWriter w;
    putHeader(w, MessageTag::TransferNonce);
    putTransferNonceBody(w, m);
    return w.take();
}

TransferNonce decodeTransferNonce(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::TransferNonce);
    TransferNonce m = getTransferNonceBody(r);
    r.expectEnd();
    return m;
}

Bytes encodeChallengeAnnounce(const ChallengeAnnounce& m) {
    ByteWriter w;
    putHeader(w, MessageTag::ChallengeAnnounce);
    putSessionId(w, m.sessionId);
    w.point(m.aggregateNonce);
    return w.take();
}

ChallengeAnnounce decodeChallengeAnnounce(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::ChallengeAnnounce);
    ChallengeAnnounce m;
    m.sessionId = getSessionId(r);
    m.aggregateNonce = r.point();
    r.expectEnd();
    return m;
}

Bytes encodeTransferPartial(const TransferPartial& m) {
    ByteWriter w;
    putHeader(w, MessageTag::TransferPartial);
    putSessionId(w, m.sessionId);
    putPartialSignature(w, m.partial);
    return w.take();
}

TransferPartial decodeTransferPartial(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::TransferPartial);
    TransferPartial m;
    m.sessionId = getSessionId(r);
    m.partial = getPartialSignature(r);
    r.expectEnd();
    return m;
}

Bytes encodeTransferPayload(const TransferPayload& m) {
    // The statement's output list and the payload's proof-carrying outputs
    // are the same commitments; they are stored once.
    if (m.spendStatement.outputs.size() != m.outputs.size()) {
        fail(Errc::InvalidParameter, "payload outputs diverge from statement");
    }
    for (std::size_t i = 0; i < m.outputs.size(); ++i) {
        if (!(m.outputs[i].first == m.spendStatement.outputs[i])) {
            fail(Errc::InvalidParameter, "payload outputs diverge from statement");
        }
    }
    ByteWriter w;
    putHeader(w, MessageTag::TransferPayload);
    putNullifierList(w, m.spendStatement.nullifiers);
    w.scalar(m.spendStatement.root);
    putProof(w, m.spendProof);
    w.u32(static_cast<std::uint32_t>(m.outputs.size()));
    for (const auto& [commitment, proof] : m.outputs) {
        w.point(commitment.point);
        putProof(w, proof);
    }
    return w.take();
}

TransferPayload decodeTransferPayload(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::TransferPayload);
    TransferPayload m;
    m.spendStatement.nullifiers = getNullifierList(r);
    m.spendStatement.root = r.scalar();
    m.spendProof = getProof(r);
    const std::uint32_t outputs = r.u32();
    if (outputs == 0) {
        r.bail("transfer payload must carry outputs");
    }
    for (std::uint32_t i = 0; i < outputs; ++i) {
        Commitment c{r.point()};
        Proof p = getProof(r);
        m.spendStatement.outputs.push_back(c);
        m.outputs.emplace_back(c, std::move(p));
    }
    r.expectEnd();
    return m;
}

Bytes encodeWithdrawPayload(const WithdrawPayload& m) {
    ByteWriter w;
    putHeader(w, MessageTag::WithdrawPayload);
    putAmountVector(w, m.statement.amounts);
    w.scalar(m.statement.nullifier);
    w.scalar(m.statement.root);
    w.str(m.statement.destination);
    putProof(w, m.proof);
    return w.take();
}

WithdrawPayload decodeWithdrawPayload(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::WithdrawPayload);
    WithdrawPayload m;
    m.statement.amounts = getAmountVector(r);
    m.statement.nullifier = r.scalar();
    m.statement.root = r.scalar();
    m.statement.destination = r.str();
    m.proof = getProof(r);
    r.expectEnd();
    return m;
}

MessageTag peekTag(ByteSpan data) {
    if (data.empty()) {
        fail(Errc::DecodeError, "empty message at offset 0");
    }
    switch (data[0]) {
    case 0x01: return MessageTag::TransferInit;
    case 0x02: return MessageTag::TransferResponse;
    case 0x03: return MessageTag::TransferPayload;
    case 0x04: return MessageTag::WithdrawPayload;
    case 0x05: return MessageTag::LedgerState;
    case 0x07: return MessageTag::TransferNonce;
    case 0x08: return MessageTag::ChallengeAnnounce;
    case 0x09: return MessageTag::TransferPartial;
    case 0x0a: return MessageTag::WalletState;
    default: fail(Errc::DecodeError, "unknown message tag at offset 0");
    }
}

// --- state files -----------------------------------------------------------------

Bytes encodeLedger(const Ledger& ledger) {
    const LedgerSnapshot snap = ledger.snapshot();
    ByteWriter body;
    body.u8(snap.config.treeDepth);
    body.u16(snap.config.rangeBitWidth);
    body.u8(static_cast<std::uint8_t>(snap.config.backend));
    body.str(snap.config.admin);
    body.u32(snap.config.rootWindow);
    body.u32(static_cast<std::uint32_t>(snap.registry.size()));
    for (const auto& [asset, gen] : snap.registry) {
        body.str(asset.id);
        body.point(gen);
    }
    body.u32(static_cast<std::uint32_t>(snap.leaves.size()));
    for (const auto& [index, digest] : snap.leaves) {
        body.u32(index);
        body.scalar(digest);
    }
    body.u32(static_cast<std::uint32_t>(snap.nullifiers.size()));
    for (const auto& n : snap.nullifiers) {
        body.scalar(n);
    }
    body.u32(static_cast<std::uint32_t>(snap.exclusions.size()));
    for (const auto& c : snap.exclusions) {
        body.point(c.point);
    }
    body.u32(static_cast<std::uint32_t>(snap.timelocks.size()));
    for (const auto& [index, ts] : snap.timelocks) {
        body.u32(index);
        body.u64(ts);
    }
    body.u32(static_cast<std::uint32_t>(snap.balances.size()));
    for (const auto& [key, amount] : snap.balances) {
        body.str(key.first);
        body.str(key.second.id);
        body.u128be(amount);
    }
    body.u64(snap.clock);
    body.u32(static_cast<std::uint32_t>(snap.rootHistory.size()));
    for (const auto& root : snap.rootHistory) {
        body.scalar(root);
    }

    ByteWriter w;
    w.raw(ByteSpan{reinterpret_cast<const std::uint8_t*>(kLedgerMagic), sizeof(kLedgerMagic)});
    w.u8(kVersion);
    const Bytes bodyBytes = body.take();
    const auto checksum = bodyChecksum(bodyBytes);
    w.raw(ByteSpan{checksum.data(), checksum.size()});
    w.raw(bodyBytes);
    return w.take();
}

Ledger decodeLedger(ByteSpan data) {
    ByteReader r(data);
    const ByteSpan magic = r.raw(sizeof(kLedgerMagic));
    if (std::memcmp(magic.data(), kLedgerMagic, sizeof(kLedgerMagic)) != 0) {
        fail(Errc::DecodeError, "bad ledger state magic at offset 0");
    }
    const std::uint8_t version = r.u8();
    if (version != kVersion) {
        fail(Errc::UnsupportedVersion, "unsupported ledger state version");
    }
    const ByteSpan checksum = r.raw(32);
    const ByteSpan body = data.subspan(r.offset());
    const auto expected = bodyChecksum(body);
    if (std::memcmp(checksum.data(), expected.data(), expected.size()) != 0) {
        fail(Errc::DecodeError, "ledger state checksum mismatch");
    }

    LedgerSnapshot snap;
    snap.config.treeDepth = r.u8();
    snap.config.rangeBitWidth = r.u16();
    const std::uint8_t backend = r.u8();
    if (backend != static_cast<std::uint8_t>(BackendChoice::Simulation) &&
        backend != static_cast<std::uint8_t>(BackendChoice::SigmaRangeSimulation)) {
        r.bail("unknown backend choice");
    }
    snap.config.backend = static_cast<BackendChoice>(backend);
    snap.config.admin = r.str();
    snap.config.rootWindow = r.u32();
    const std::uint32_t assets = r.u32();
    for (std::uint32_t i = 0; i < assets; ++i) {
        AssetId id{r.str()};
        snap.registry.emplace_back(id, r.point());
    }
    const std::uint32_t leaves = r.u32();
    for (std::uint32_t i = 0; i < leaves; ++i) {
        const std::uint32_t index = r.u32();
        snap.leaves.emplace_back(index, r.scalar());
    }
    const std::uint32_t nulls = r.u32();
    for (std::uint32_t i = 0; i < nulls; ++i) {
        snap.nullifiers.push_back(r.scalar());
    }
    const std::uint32_t exclusions = r.u32();
    for (std::uint32_t i = 0; i < exclusions; ++i) {
        snap.exclusions.push_back(Commitment{r.point()});
    }
    const std::uint32_t locks = r.u32();
    for (std::uint32_t i = 0; i < locks; ++i) {
        const std::uint32_t index = r.u32();
        snap.timelocks.emplace_back(index, r.u64());
    }
    const std::uint32_t balances = r.u32();
    for (std::uint32_t i = 0; i < balances; ++i) {
        AccountId account = r.str();
        AssetId asset{r.str()};
        snap.balances.push_back({{account, asset}, r.u128be()});
    }
    snap.clock = r.u64();
    const std::uint32_t roots = r.u32();
    for (std::uint32_t i = 0; i < roots; ++i) {
        snap.rootHistory.push_back(r.scalar());
    }
    r.expectEnd();
    return Ledger::fromSnapshot(snap);
}

Bytes encodeWallet(const WalletSnapshot& snapshot) {
    ByteWriter body;
    body.u8(static_cast<std::uint8_t>(snapshot.policy.backend));
    body.u16(snapshot.policy.rangeBitWidth);
    body.u8(snapshot.policy.treeDepth);
    body.u64(snapshot.rngCounter);
    body.u32(static_cast<std::uint32_t>(snapshot.coins.size()));
    for (const auto& coin : snapshot.coins) {
        putCoinRecord(body, coin);
    }
    body.u32(static_cast<std::uint32_t>(snapshot.senderSessions.size()));
    for (const auto& s : snapshot.senderSessions) {
        putSenderSession(body, s);
    }
    body.u32(static_cast<std::uint32_t>(snapshot.recipientSessions.size()));
    for (const auto& s : snapshot.recipientSessions) {
        putRecipientSession(body, s);
    }

    ByteWriter w;
    putHeader(w, MessageTag::WalletState);
    const Bytes bodyBytes = body.take();
    const auto checksum = bodyChecksum(bodyBytes);
    w.raw(ByteSpan{checksum.data(), checksum.size()});
    w.raw(bodyBytes);
    return w.take();
}

WalletSnapshot decodeWalletSnapshot(ByteSpan data) {
    ByteReader r(data);
    readHeader(r, MessageTag::WalletState);
    const ByteSpan checksum = r.raw(32);
    const ByteSpan body = data.subspan(r.offset());
    const auto expected = bodyChecksum(body);
    if (std::memcmp(checksum.data(), expected.data(), expected.size()) != 0) {
        fail(Errc::DecodeError, "wallet state checksum mismatch");
    }

    WalletSnapshot snap;
    const std::uint8_t backend = r.u8();
    if (backend != static_cast<std::uint8_t>(BackendChoice::Simulation) &&
        backend != static_cast<std::uint8_t>(BackendChoice::SigmaRangeSimulation)) {
        r.bail("unknown backend choice");
    }
    snap.policy.backend = static_cast<BackendChoice>(backend);
    snap.policy.rangeBitWidth = r.u16();
    snap.policy.treeDepth = r.u8();
    snap.rngCounter = r.u64();
    const std::uint32_t coins = r.u32();
    for (std::uint32_t i = 0; i < coins; ++i) {
        snap.coins.push_back(getCoinRecord(r));
    }
    const std::uint32_t senders = r.u32();
    for (std::uint32_t i = 0; i < senders; ++i) {
        snap.senderSessions.push_back(getSenderSession(r));
    }
    const std::uint32_t recipients = r.u32();
    for (std::uint32_t i = 0; i < recipients; ++i) {
        snap.recipientSessions.push_back(getRecipientSession(r));
    }
    r.expectEnd();
    return snap;
}

} // namespace atlantis::wire
