// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace ercbench {

// Keccak-256 (the pre-FIPS padding variant Ethereum uses). Needed to emit
// EIP-55 checksummed address literals, which solc 0.8 insists on.
namespace detail {

inline void keccakf(std::array<uint64_t, 25>& st) {
  static constexpr uint64_t rc[24] = {
      0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull,
      0x8000000080008000ull, 0x000000000000808bull, 0x0000000080000001ull,
      0x8000000080008081ull, 0x8000000000008009ull, 0x000000000000008aull,
      0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
      0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull,
      0x8000000000008003ull, 0x8000000000008002ull, 0x8000000000000080ull,
      0x000000000000800aull, 0x800000008000000aull, 0x8000000080008081ull,
      0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull};
  static constexpr int rot[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                  27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
  static constexpr int pil[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                  15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};
  auto rotl = [](uint64_t x, int n) { return (x << n) | (x >> (64 - n)); };

  for (int round = 0; round < 24; ++round) {
    uint64_t bc[5];
    for (int i = 0; i < 5; ++i)
      bc[i] = st[0 + i] ^ st[5 + i] ^ st[10 + i] ^ st[15 + i] ^ st[20 + i];
    for (int i = 0; i < 5; ++i) {
      uint64_t t = bc[(i + 4) % 5] ^ rotl(bc[(i + 1) % 5], 1);
      for (int j = 0; j < 25; j += 5) st[static_cast<std::size_t>(j + i)] ^= t;
    }
    uint64_t t = st[1];
    for (int i = 0; i < 24; ++i) {
      int j = pil[i];
      uint64_t tmp = st[static_cast<std::size_t>(j)];
      st[static_cast<std::size_t>(j)] = rotl(t, rot[i]);
      t = tmp;
    }
    for (int j = 0; j < 25; j += 5) {
      for (int i = 0; i < 5; ++i) bc[i] = st[static_cast<std::size_t>(j + i)];
      for (int i = 0; i < 5; ++i)
        st[static_cast<std::size_t>(j + i)] ^= (~bc[(i + 1) % 5]) & bc[(i + 2) % 5];
    }
    st[0] ^= rc[round];
  }
}

}  // namespace detail

inline std::array<uint8_t, 32> keccak256(std::string_view data) {
  std::array<uint64_t, 25> st{};
  constexpr std::size_t rate = 136;  // 1088-bit rate for Keccak-256
  std::size_t off = 0;
  auto absorb_block = [&](const uint8_t* block) {
    for (std::size_t i = 0; i < rate / 8; ++i) {
      uint64_t w = 0;
      std::memcpy(&w, block + i * 8, 8);
      st[i] ^= w;
    }
    detail::keccakf(st);
  };
  while (data.size() - off >= rate) {
    absorb_block(reinterpret_cast<const uint8_t*>(data.data()) + off);
    off += rate;
  }
  uint8_t last[rate] = {};
  std::memcpy(last, data.data() + off, data.size() - off);
  last[data.size() - off] = 0x01;  // Keccak (not SHA-3) domain padding
  last[rate - 1] |= 0x80;
  absorb_block(last);

  std::array<uint8_t, 32> out{};
  for (std::size_t i = 0; i < 4; ++i) std::memcpy(out.data() + i * 8, &st[i], 8);
  return out;
}

/// EIP-55 mixed-case checksum encoding of a 20-byte address.
inline std::string checksum_address(const std::array<uint8_t, 20>& addr) {
  static constexpr char hexdig[] = "0123456789abcdef";
  std::string lower;
  lower.reserve(40);
  for (uint8_t b : addr) {
    lower.push_back(hexdig[b >> 4]);
    lower.push_back(hexdig[b & 0xf]);
  }
  auto hash = keccak256(lower);
  std::string out = "0x";
  for (std::size_t i = 0; i < 40; ++i) {
    char c = lower[i];
    uint8_t nib = (i % 2 == 0) ? (hash[i / 2] >> 4) : (hash[i / 2] & 0xf);
    out.push_back((c >= 'a' && nib >= 8) ? static_cast<char>(c - 'a' + 'A') : c);
  }
  return out;
}

}  // namespace ercbench
