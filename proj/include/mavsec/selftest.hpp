#pragma once

#include <string>
#include <vector>

#include "mavsec/bytes.hpp"
#include "mavsec/crc.hpp"
#include "mavsec/crypto/aes.hpp"
#include "mavsec/crypto/chacha20.hpp"
#include "mavsec/crypto/modes.hpp"
#include "mavsec/crypto/rc4.hpp"

namespace mavsec {

struct SelfTestResult {
  std::string name;
  bool passed = false;
};

/// Published known-answer vectors for every primitive.
inline std::vector<SelfTestResult> run_selftest() {
  using namespace crypto;
  std::vector<SelfTestResult> results;
  const auto check = [&](std::string name, ByteView got, std::string_view want_hex) {
    results.push_back({std::move(name), to_hex(got) == want_hex});
  };

  {
    const std::uint16_t crc = crc16_x25_update(kCrcSeed, as_bytes("123456789"));
    results.push_back({"crc16-x25 check value", crc == 0x6f91});
  }
  {
    // FIPS-197 appendix C.3
    const Key256 key = Key256::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
    const Block pt = fixed_from_hex<16>("00112233445566778899aabbccddeeff");
    check("aes-256 block (FIPS-197 C.3)", aes256_encrypt_block(key, pt), "8ea2b7ca516745bfeafc49904b496089");
    const Block back = Aes256(key).decrypt_block(aes256_encrypt_block(key, pt));
    results.push_back({"aes-256 inverse block", back == pt});
  }
  const Key256 sp_key = Key256::from_hex("603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4");
  const Bytes sp_pt = from_hex(
      "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51"
      "30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710");
  {
    // SP 800-38A F.5.5
    check("aes-256-ctr (SP 800-38A F.5.5)", ctr_xcrypt(sp_key, Iv128::from_hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff"), sp_pt),
          "601ec313775789a5b7a7f504bbf3d228f443e3ca4d62b59aca84e990cacaf5c5"
          "2b0930daa23de94ce87017ba2d84988ddfc9c58db67aada613c2dd08457941a6");
  }
  {
    // SP 800-38A F.2.5, whole blocks without padding
    Bytes buf = sp_pt;
    cbc_encrypt_blocks(Aes256(sp_key), Iv128::from_hex("000102030405060708090a0b0c0d0e0f"), buf);
    check("aes-256-cbc (SP 800-38A F.2.5)", buf,
          "f58c4c04d6e5f1ba779eabfb5f7bfbd69cfc4e967edb808d679f777bc6702c7d"
          "39f23369a9d9bacfa530e26304231461b2eb05e2c39be9fcda6c19078c6a9d1b");
  }
  {
    Rc4State st = rc4_ksa(as_bytes("Key"));
    check("rc4 (Key/Plaintext)", rc4_xcrypt(st, as_bytes("Plaintext")), "bbf316e8d940af0ad3");
  }
  {
    // RFC 8439 section 2.4.2
    Nonce96 nonce{fixed_from_hex<12>("000000000000004a00000000"), 1};
    const Key256 key = Key256::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
    check("chacha20 (RFC 8439 2.4.2)",
          chacha20_xcrypt(key, nonce,
                          as_bytes("Ladies and Gentlemen of the class of '99: If I could offer you only one tip for "
                                   "the future, sunscreen would be it.")),
          "6e2e359a2568f98041ba0728dd0d6981e97e7aec1d4360c20a27afccfd9fae0b"
          "f91b65c5524733ab8f593dabcd62b3571639d624e65152ab8f530c359f0861d8"
          "07ca0dbf500d6a6156a38e088a22b65e52bc514d16ccf806818ce91ab7793736"
          "5af90bbf74a35be6b40b8eedf2785e42874d");
  }
  return results;
}

}  // namespace mavsec
