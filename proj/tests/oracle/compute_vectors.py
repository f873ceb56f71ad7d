"""Independent reference computation of the frozen expected values used by the
C++ test suites. Uses the `cryptography` package (OpenSSL-backed) for the
ciphers and a bit-level CRC for the checksum values."""
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
try:
    from cryptography.hazmat.decrepit.ciphers.algorithms import ARC4
except ImportError:
    ARC4 = algorithms.ARC4


def crc_x25_bitwise(data, crc=0xFFFF):
    for b in data:
        crc ^= b
        for _ in range(8):
            crc = (crc >> 1) ^ 0x8408 if crc & 1 else crc >> 1
    return crc


def crc_extra(name, fields):
    crc = crc_x25_bitwise((name + " ").encode())
    for ftype, fname in fields:
        crc = crc_x25_bitwise((ftype + " ").encode(), crc)
        crc = crc_x25_bitwise((fname + " ").encode(), crc)
    return (crc & 0xFF) ^ (crc >> 8)


def ecb(key, pt):
    e = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    return e.update(pt) + e.finalize()


def ctr(key, iv, pt):
    e = Cipher(algorithms.AES(key), modes.CTR(iv)).encryptor()
    return e.update(pt) + e.finalize()


def cbc(key, iv, pt):
    e = Cipher(algorithms.AES(key), modes.CBC(iv)).encryptor()
    return e.update(pt) + e.finalize()


def chacha(key, counter, nonce, pt):
    full = counter.to_bytes(4, "little") + nonce
    e = Cipher(algorithms.ChaCha20(key, full), mode=None).encryptor()
    return e.update(pt) + e.finalize()


def rc4_transcription(key, data):
    s = list(range(256))
    j = 0
    for i in range(256):
        j = (j + s[i] + key[i % len(key)]) & 0xFF
        s[i], s[j] = s[j], s[i]
    i = j = 0
    out = bytearray()
    for b in data:
        i = (i + 1) & 0xFF
        j = (j + s[i]) & 0xFF
        s[i], s[j] = s[j], s[i]
        out.append(b ^ s[(s[i] + s[j]) & 0xFF])
    return bytes(out)


def rc4_lib(key, data):
    e = Cipher(ARC4(key), mode=None).encryptor()
    return e.update(data)


h = bytes.fromhex
print("crc x25 '123456789':", hex(crc_x25_bitwise(b"123456789")))
print("crc_extra HEARTBEAT", crc_extra("HEARTBEAT", [("uint32_t", "custom_mode"), ("uint8_t", "type"), ("uint8_t", "autopilot"), ("uint8_t", "base_mode"), ("uint8_t", "system_status"), ("uint8_t", "mavlink_version")]))
print("crc_extra SYS_STATUS", crc_extra("SYS_STATUS", [("uint32_t", "onboard_control_sensors_present"), ("uint32_t", "onboard_control_sensors_enabled"), ("uint32_t", "onboard_control_sensors_health"), ("uint16_t", "load"), ("uint16_t", "voltage_battery"), ("int16_t", "current_battery"), ("uint16_t", "drop_rate_comm"), ("uint16_t", "errors_comm"), ("uint16_t", "errors_count1"), ("uint16_t", "errors_count2"), ("uint16_t", "errors_count3"), ("uint16_t", "errors_count4"), ("int8_t", "battery_remaining")]))
print("crc_extra ATTITUDE", crc_extra("ATTITUDE", [("uint32_t", "time_boot_ms"), ("float", "roll"), ("float", "pitch"), ("float", "yaw"), ("float", "rollspeed"), ("float", "pitchspeed"), ("float", "yawspeed")]))
print("crc_extra GLOBAL_POSITION_INT", crc_extra("GLOBAL_POSITION_INT", [("uint32_t", "time_boot_ms"), ("int32_t", "lat"), ("int32_t", "lon"), ("int32_t", "alt"), ("int32_t", "relative_alt"), ("int16_t", "vx"), ("int16_t", "vy"), ("int16_t", "vz"), ("uint16_t", "hdg")]))

# Heartbeat frame used by the codec tests: seq 0, sys 1, comp 1,
# payload custom_mode=0, type=2, autopilot=3, base_mode=0x51, status=4, version=3
hb_payload = bytes([0, 0, 0, 0, 2, 3, 0x51, 4, 3])
hdr = bytes([9, 0, 0, 0, 1, 1, 0, 0, 0])
for extra in (50, 0):
    c = crc_x25_bitwise(hdr + hb_payload)
    c = crc_x25_bitwise(bytes([extra]), c)
    print("heartbeat checksum crc_extra", extra, hex(c))

k256 = h("603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4")
print("FIPS-197 C.3:", ecb(h("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f"), h("00112233445566778899aabbccddeeff")).hex())
pt4 = h("6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e5130c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710")
print("SP800-38A F.5.5 CTR:", ctr(k256, h("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff"), pt4).hex())
print("SP800-38A F.2.5 CBC:", cbc(k256, h("000102030405060708090a0b0c0d0e0f"), pt4).hex())
sunscreen = b"Ladies and Gentlemen of the class of '99: If I could offer you only one tip for the future, sunscreen would be it."
print("RFC 8439 2.4.2:", chacha(bytes(range(32)), 1, h("000000000000004a00000000"), sunscreen).hex())
print("RC4 Key/Plaintext transcription:", rc4_transcription(b"Key", b"Plaintext").hex())
print("RC4 Wiki/pedia:", rc4_transcription(b"Wiki", b"pedia").hex())
# the library refuses keys under 40 bits; cross-check on the RFC 6229 40-bit key
k40 = h("0102030405")
print("RC4 RFC6229 40-bit keystream[0:16] transcription:", rc4_transcription(k40, bytes(16)).hex())
print("RC4 RFC6229 40-bit keystream[0:16] library:      ", rc4_lib(k40, bytes(16)).hex())
print("RC4 Key/Plaintext 32-byte key check:", rc4_transcription(bytes(range(32)), b"Plaintext").hex(), rc4_lib(bytes(range(32)), b"Plaintext").hex())
# secure_channel ChaCha20 example: psk 00..1f, salt_tx 0102030405060708, counter 0
# nonce = salt[0:4] || counter(be64)
nonce = h("01020304") + (0).to_bytes(8, "big")
print("seal chacha heartbeat ct:", chacha(bytes(range(32)), 0, nonce, hb_payload).hex())
