#pragma once

#include "mavsec/bench.hpp"
#include "mavsec/bytes.hpp"
#include "mavsec/channel.hpp"
#include "mavsec/crc.hpp"
#include "mavsec/crypto/aes.hpp"
#include "mavsec/crypto/chacha20.hpp"
#include "mavsec/crypto/modes.hpp"
#include "mavsec/crypto/rc4.hpp"
#include "mavsec/crypto/types.hpp"
#include "mavsec/dialect.hpp"
#include "mavsec/error.hpp"
#include "mavsec/frame.hpp"
#include "mavsec/messages.hpp"
#include "mavsec/selftest.hpp"
#include "mavsec/sim.hpp"
#include "mavsec/udp.hpp"
