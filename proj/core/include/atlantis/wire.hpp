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

#include "atlantis/wallet.hpp"

namespace atlantis {

// Canonical binary formats for every protocol object. Scalars are 32-byte
// big-endian, points the group's compressed form, amounts 16-byte
// big-endian, lists carry a 4-byte big-endian count, maps are sorted by key
// bytes, and every top-level message starts with a 1-byte type tag and a
// 1-byte version. Decoding is strict: non-canonical field encodings,
// unknown tags and trailing bytes are errors naming the offset.

namespace wire {

inline constexpr std::uint8_t kVersion = 1;

enum class MessageTag : std::uint8_t {
    TransferInit = 0x01,
    TransferResponse = 0x02,
    TransferPayload = 0x03,
    WithdrawPayload = 0x04,
    LedgerState = 0x05,
    TransferNonce = 0x07,
    ChallengeAnnounce = 0x08,
    TransferPartial = 0x09,
    WalletState = 0x0a,
};

class ByteWriter {
  public:
    void u8(std::uint8_t v);
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void u128be(u128 v);
    void raw(ByteSpan data);
    void scalar(const Scalar& s);
    void point(const GroupPoint& p);
    void str(const std::string& s); // u32 length prefix
    void blob(ByteSpan data);       // u32 length prefix

    [[nodiscard]] const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

  private:
    Bytes out_;
};

class ByteReader {
  public:
    explicit ByteReader(ByteSpan data) : data_(data) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    std::uint64_t u64();
    u128 u128be();
    ByteSpan raw(std::size_t n);
    Scalar scalar();
    GroupPoint point();
    std::string str();
    Bytes blob();

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] std::size_t remaining() const { return data_.size() - offset_; }
    void expectEnd() const; // throws DecodeError on trailing bytes

    [[noreturn]] void bail(const std::string& what) const;

  private:
    ByteSpan data_;
    std::size_t offset_ = 0;
};

// The exact byte string all transfer parties sign: 4-byte count then the
// sorted nullifier scalars. Rejects unsorted, duplicate or empty input.
Bytes encodeNullifierList(std::span<const Scalar> nullifiers);

// Building blocks reused across messages.
void putAmountVector(ByteWriter& w, const AmountVector& v);
AmountVector getAmountVector(ByteReader& r);
void putMerkleProof(ByteWriter& w, const MerkleProof& p);
MerkleProof getMerkleProof(ByteReader& r);
void putSignature(ByteWriter& w, const Signature& sig);
Signature getSignature(ByteReader& r);
void putPartialSignature(ByteWriter& w, const PartialSignature& p);
PartialSignature getPartialSignature(ByteReader& r);
void putProof(ByteWriter& w, const Proof& p);
Proof getProof(ByteReader& r);

// Statements and witnesses (embedded forms; witnesses feed the simulation
// backend, statement encodings feed its binding digest).
Bytes encodeRangeStatement(const RangeStatement& stmt);
Bytes encodeSpendStatement(const SpendStatement& stmt);
Bytes encodeWithdrawStatement(const WithdrawStatement& stmt);
Bytes encodeRangeWitness(const RangeWitness& wit);
RangeWitness decodeRangeWitness(ByteSpan data);
Bytes encodeSpendWitness(const SpendWitness& wit);
SpendWitness decodeSpendWitness(ByteSpan data);
Bytes encodeWithdrawWitness(const WithdrawWitness& wit);
WithdrawWitness decodeWithdrawWitness(ByteSpan data);

// Top-level messages (tag + version framed).
Bytes encodeTransferInit(const TransferInit& m);
TransferInit decodeTransferInit(ByteSpan data);
Bytes encodeTransferResponse(const TransferResponse& m);
TransferResponse decodeTransferResponse(ByteSpan data);
Bytes encodeTransferNonce(const TransferNonce& m);
TransferNonce decodeTransferNonce(ByteSpan data);
Bytes encodeChallengeAnnounce(const ChallengeAnnounce& m);
ChallengeAnnounce decodeChallengeAnnounce(ByteSpan data);
Bytes encodeTransferPartial(const TransferPartial& m);
TransferPartial decodeTransferPartial(ByteSpan data);
Bytes encodeTransferPayload(const TransferPayload& m);
TransferPayload decodeTransferPayload(ByteSpan data);
Bytes encodeWithdrawPayload(const WithdrawPayload& m);
WithdrawPayload decodeWithdrawPayload(ByteSpan data);

MessageTag peekTag(ByteSpan data); // throws DecodeError on unknown tag

// State files. Layout: magic, version, 32-byte integrity checksum of the
// body, body. Loading a ledger re-derives the registry, rebuilds the tree
// and verifies the stored root before accepting the file.
inline constexpr char kLedgerMagic[4] = {'A', 'T', 'L', 'S'};

Bytes encodeLedger(const Ledger& ledger);
Ledger decodeLedger(ByteSpan data);

struct WalletSnapshot {
    ProofPolicy policy;
    std::uint64_t rngCounter = 0; // seeded-rng stream position, fixture mode
    std::vector<CoinRecord> coins;
    std::vector<SenderSession> senderSessions;
    std::vector<RecipientSession> recipientSessions;
};

Bytes encodeWallet(const WalletSnapshot& snapshot);
WalletSnapshot decodeWalletSnapshot(ByteSpan data);

// Human-readable mirror of the protocol message files ("key: value" lines
// with hex fields). Never hashed or signed; converts to/from the canonical
// binary form. Text inputs are recognized by their "atlantis: " header.
std::string messageToText(ByteSpan binary);
Bytes messageFromText(const std::string& text);
bool looksLikeText(ByteSpan data);

} // namespace wire
} // namespace atlantis
