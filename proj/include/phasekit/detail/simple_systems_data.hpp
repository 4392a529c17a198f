// Generated by tools/gen_systems.py from data/systems/source.txt. Do not edit.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace phasekit::detail {

struct EmbeddedSystems {
  std::string_view model;
  std::string_view text;
  std::uint64_t fnv1a;
};

inline constexpr std::array<EmbeddedSystems, 5> kEmbeddedSystems{{
    {"M2", R"SYS(MODEL M2
RANKING k1 k3 k2 k4 k5 L1 L2 L3 S1 S2
SYSTEM 1
EQ; k1; 1:0000000013 -3:0000000121 1:0000000140 1:0000000210 1:0000001012 1:0000001031 -2:0000001120 1:0000002030 -2:0000010022 1:0000010111 1:0000010130 -1:0000011021 -1:0000011040 1:0000020031 1:1000000003 -1:1000000022 -1:1000000111 1:1000000130 1:1000001021 -1:1000001040 -1:1000010012 1:1000010031
EQ; k3; 1:0000000101 -1:0000000120 -1:0010000002 1:0010000110 -1:0010001020 1:0010010011
EQ; k2; 1:0000000002 -1:0000000110 1:0000001020 -1:0000010011 -1:0100000011 1:0100000030
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000002 1:0000000110 -1:0000001020 1:0000010011
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 2
EQ; k1; -1:0000000130 -1:0000000200 2:0000001110 -1:0000002020 -1:0000010120 1:0000011030 -1:1000000120 1:1000001030
EQ; k3; 1:0000000110 -1:0010000100 1:0010001010
EQ; k2; -1:0000000100 1:0000001010 1:0100000020
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
NEQ; L2; -1:0000000100 1:0000001010
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 3
EQ; k1; 1:0000000101 -1:0100000110 1:0100001001 1:0200000011 1:1100000011
EQ; k3; -1:0000000100 1:0110000010
NEQ; k2; 1:0100000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 1:0000000110 -1:0000001001 1:0000010011
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 4
EQ; k1; 1:0000001010 1:0010000001 1:1000000001
EQ; k2; 1:0100000000
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 -1:0000001020 1:0000010011
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
NEQ; S2; 1:0000000001
SYSTEM 5
EQ; k1; 1:0000010000 1:0010000000 1:1000000000
EQ; k2; 1:0100000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 6
EQ; k1; 1:0000001000 1:0001010000 1:0002000000 1:0100010000 2:0101000000 1:0200000000 1:1100000000
EQ; k3; -1:0000001000 -1:0001010000 -1:0002000000 -1:0101000000 1:0110000000
NEQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 7
EQ; k1; 1:0000010000 1:0001000000 1:0010000000 1:1000000000
EQ; k2; 1:0100000000
EQ; k4; 1:0000001000 1:0001010000 1:0002000000
EQ; k5; 1:0000100000
NEQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 8
EQ; k1; 1:0010000000 1:1000000000
EQ; k2; 1:0100000000
EQ; k4; 1:0000010000 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 9
EQ; k1; 1:0000010000 1:0010000000 1:1000000000
EQ; k2; 1:0100000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 10
EQ; k1; 1:0000010000 2:0010000000 2:1000000000
EQ; k2; 1:0100000000
EQ; k4; 1:0000010000 2:0001000000
EQ; k5; 1:0000100000
EQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 11
EQ; k1; 1:0010000000 1:1000000000
EQ; k2; 1:0100000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
)SYS", 0x763b15421973a1ffULL},
    {"M3", R"SYS(MODEL M3
RANKING k1 k2 k3 k4 k5 L1 L2 L3 S1 S2
SYSTEM 1
EQ; k1; 1:0000000101 -1:0010000110 1:0010001020 1:0020000011 1:1010000011
EQ; k2; -1:0000000100 1:0110000010
NEQ; k3; 1:0010000000
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 1:0000000110 -1:0000001020 1:0000010011
NEQ; S1; 1:0000000010
NEQ; S2; 1:0000000001
SYSTEM 2
EQ; k1; 1:0000000100 1:0010010010 1:0020000010 1:1010000010
EQ; k2; -1:0000000100 1:0110000010
NEQ; k3; 1:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L2; -1:0000000100 1:0000001010
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 3
EQ; k1; 1:0000001010 1:0100000001 1:1000000001
EQ; k3; 1:0010000000
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 -1:0000001020 1:0000010011
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
NEQ; S2; 1:0000000001
SYSTEM 4
EQ; k1; 1:0000010000 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 5
EQ; k1; 1:0000001000 1:0001010000 1:0002000000 1:0010010000 1:0011000000 1:0020000000 1:1010000000
EQ; k2; -1:0000001000 -1:0001010000 -1:0002000000 1:0110000000
NEQ; k3; 1:0010000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 6
EQ; k1; 1:0000010000 1:0001000000 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0000001000 1:0001010000 1:0002000000
EQ; k5; 1:0000100000
NEQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 7
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0000010000 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 8
EQ; k1; 1:0000010000 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 9
EQ; k1; 1:0000010000 2:0100000000 2:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0000010000 2:0001000000
EQ; k5; 1:0000100000
EQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 10
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
)SYS", 0x55e57180b49aebdcULL},
    {"M4", R"SYS(MODEL M4
RANKING k1 k2 k3 k4 k5 L1 L2 L3 S1 S2
SYSTEM 1
EQ; k1; -1:0000000011 1:0000000100 -1:0000001010 1:0000010020 -1:0010000001 1:0010000020 -1:1000000001 1:1000000020
EQ; k2; 1:0000000002 -1:0000000110 1:0000001020 -1:0000010011 -1:0100000011 1:0100000030
EQ; k3; 1:0000000100 -1:0010000001 1:0010010010 1:0020000010
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; 1:0000000002 -4:0000000110 -2:0000010011 1:0000020020
NEQ; L3; 1:0000000100
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 2
EQ; k1; -1:0000000002 -1:0000001020 1:0000010011 -1:1000000011 1:1000000030
EQ; k3; -1:0000000001 1:0000010010 1:0010000010
EQ; k2; 1:0000000002 1:0000001020 -1:0000010011 -1:0100000011 1:0100000030
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 3
EQ; k1; -1:0000000011 -1:0000001010 1:0000010020 -1:1000000001 1:1000000020
EQ; k2; 1:0000000002 1:0000001020 -1:0000010011 -1:0100000011 1:0100000030
EQ; k3; 1:0010000000
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 4
EQ; k1; -1:0000000002 -1:0000000021 2:0000000110 -2:0000001020 1:0000010011 1:0000010030 -2:1000000011 2:1000000030
EQ; k2; 1:0000000002 -1:0000000110 1:0000001020 -1:0000010011 -1:0100000011 1:0100000030
EQ; k3; -1:0000000001 1:0000010010 2:0010000010
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 1:0000000002 -4:0000000110 -2:0000010011 1:0000020020
NEQ; L3; 1:0000000100
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 5
EQ; k1; -1:0000001010 -1:1000000001 1:1000000020
EQ; k2; 1:0000001010 -1:0100000001 1:0100000020
EQ; k3; 1:0010000000
EQ; k4; 1:0000000001 -1:0000000020 1:0001000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; -1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 6
EQ; k1; 1:0000000100 -1:0000001010 1:0000010020 1:0010000020 1:1000000020
EQ; k2; -1:0000000100 1:0000001010 1:0100000020
EQ; k4; -1:0000000010 1:0001000000
EQ; k3; 1:0000000100 1:0010010010 1:0020000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -4:0000000100 1:0000020010
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 7
EQ; k1; -1:0000001000 1:1000000010
EQ; k2; 1:0000001000 1:0100000010
EQ; k3; 1:0000010000 1:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; 1:0000010000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 8
EQ; k1; -1:0000001000 1:0000010010 1:1000000010
EQ; k2; 1:0000001000 1:0100000010
EQ; k3; 1:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; 1:0000010000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 9
EQ; k1; 2:0000000100 -2:0000001010 1:0000010020 2:1000000020
EQ; k2; -1:0000000100 1:0000001010 1:0100000020
EQ; k3; 1:0000010000 2:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -4:0000000100 1:0000020010
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 10
EQ; k1; -1:0000001000 1:1000000010
EQ; k2; 1:0000001000 1:0100000010
EQ; k3; 1:0010000000
EQ; k4; -1:0000000010 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 1:0000010000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 11
EQ; k1; -1:0000000110 1:0000001001 1:0010000011 1:0100000011 1:1000000011
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; k3; 1:0000000101 -1:0010000110 1:0010001001 1:0020000011
EQ; L1; -1:0000000002 1:0000000110 -1:0000001001 1:0000010011
NEQ; L2; -4:0000000111 1:0000000200 -2:0000001110 1:0000002001
NEQ; L3; 1:0000000100
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 12
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0000001000 1:0010000010
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000001 -1:0000001000 1:0000010010
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 13
EQ; k1; 1:0000001000 1:0100000010 1:1000000010
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000001 -1:0000001000 1:0000010010
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 14
EQ; k1; -1:0000000110 1:0000001001 2:0100000011 2:1000000011
EQ; k3; -1:0000000110 1:0000001001 2:0010000011
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 1:0000000110 -1:0000001001 1:0000010011
EQ; L2; -4:0000000111 1:0000000200 -2:0000001110 1:0000002001
NEQ; L3; 1:0000000100
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 15
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000001 1:0000010010
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; -1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 16
EQ; k1; -1:0000001000 -1:0010010000 -1:0020000000 1:1001000000
EQ; k2; 1:0000001000 1:0001010000 1:0002000000 1:0010010000 1:0011000000 1:0020000000 1:0101000000
NEQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 17
EQ; k1; 1:0000010000 1:0010000000 1:0100000000 1:1000000000
EQ; k3; 1:0000001000 1:0010010000 1:0020000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 18
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0000010000 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 19
EQ; k1; 1:0000010000 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 20
EQ; k1; 1:0000010000 2:0100000000 2:1000000000
EQ; k3; 1:0000010000 2:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 21
EQ; k1; 1:0100000000 1:1000000000
EQ; k3; 1:0010000000
EQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
)SYS", 0x715a9182ebf3dd74ULL},
    {"M8", R"SYS(MODEL M8
RANKING k1 k3 k4 k2 k5 L1 L2 L3 S1 S2
SYSTEM 1
EQ; k1; -1:0000000100 1:1100000010
EQ; k3; -1:0000000002 1:0000000110 -1:0000001020 1:0000010011 1:0100000011 -1:0100000030 1:0110000020
EQ; k4; 1:0000000002 -1:0000000110 1:0000001020 -1:0000010011 1:0101000020
EQ; k2; 1:0000000100 -1:0100000001 1:0100010010 1:0200000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; 1:0000000002 -4:0000000110 -2:0000010011 1:0000020020
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 2
EQ; k1; 1:1000000000
EQ; k3; 1:0000000011 1:0000001010 -1:0000010020 -1:0010000001 1:0010010010
EQ; k4; -1:0000000002 -1:0000001020 1:0000010011 -1:0001000011 1:0001010020
EQ; k2; -1:0000000001 1:0000010010 1:0100000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 3
EQ; k1; 2:0000000100 -1:1000000001 1:1000010010
EQ; k3; 1:0000000002 1:0000000021 -2:0000000110 2:0000001020 -1:0000010011 -1:0000010030 -1:0010000011 1:0010010020
EQ; k4; -2:0000000002 2:0000000110 -2:0000001020 2:0000010011 -1:0001000011 1:0001010020
EQ; k2; -1:0000000001 1:0000010010 2:0100000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 1:0000000002 -4:0000000110 -2:0000010011 1:0000020020
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 4
EQ; k1; 1:0000001010 1:1000000001
EQ; k3; 1:0000000001 -1:0000000020 1:0001000010 1:0010000010
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 -1:0000001020 1:0000010011
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
NEQ; S2; 1:0000000001
SYSTEM 5
EQ; k1; 1:0000010000 1:1000000000
EQ; k3; -1:0000000010 1:0001000000 1:0010000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 6
EQ; k1; 1:0000010000 1:0001000000 1:0010000000 1:0100000000 1:1000000000
EQ; k3; 1:0000001000 1:0001010000 1:0002000000 1:0010010000 2:0011000000 1:0020000000 1:0100010000 2:0101000000 1:0110000000 1:0200000000
NEQ; k4; 4:0000001000 -1:0000020000 2:0100010000 4:0101000000 3:0200000000
NEQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 7
EQ; k1; 1:0000010000 1:0001000000 1:0010000000 1:1000000000
EQ; k3; 1:0000001000 1:0001010000 1:0002000000 1:0010010000 2:0011000000 1:0020000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
NEQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 8
EQ; k1; 1:1000000000
EQ; k3; 1:0000010000 1:0001000000 1:0010000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 9
EQ; k1; 1:0000010000 1:1000000000
EQ; k3; 1:0001000000 1:0010000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 10
EQ; k1; 1:0000010000 1:0100000000 2:1000000000
EQ; k3; -4:0000001000 1:0000020000 4:0110000000 -1:0200000000
EQ; k4; 4:0000001000 -1:0000020000 2:0100010000 4:0101000000 3:0200000000
NEQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 11
EQ; k1; 1:0000010000 2:1000000000
EQ; k3; 1:0000010000 2:0001000000 2:0010000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 12
EQ; k1; 1:1000000000
EQ; k3; 1:0001000000 1:0010000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
)SYS", 0x608724aa8752b1ebULL},
    {"M9", R"SYS(MODEL M9
RANKING k3 k1 k4 k2 k5 L1 L2 L3 S1 S2
SYSTEM 1
EQ; k3; -1:0000000002 1:0000000110 -1:0000001020 1:0000010011 -1:0010000011 1:0010010020 1:0100000011 -1:0100000030 2:0110000020
EQ; k4; 1:0000000011 -1:0000000100 1:0000001010 -1:0000010020 -1:0001000001 1:0001010010 1:0100000001 -1:0100000020 2:0101000010
EQ; k1; -1:0000000001 1:0000010010 1:0100000010 1:1000000010
EQ; k2; 1:0000000100 -1:0100000001 1:0100010010 1:0200000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; 1:0000000002 -4:0000000110 -2:0000010011 1:0000020020
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 2
EQ; k3; 1:0000000011 1:0000001010 -1:0000010020 -1:0010000001 1:0010010010
EQ; k1; 1:1000000000
EQ; k4; -1:0000000002 -1:0000001020 1:0000010011 -1:0001000011 1:0001010020
EQ; k2; -1:0000000001 1:0000010010 1:0100000010
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 3
EQ; k3; -1:0000000002 -1:0000001020 1:0000010011 -1:0010000011 1:0010010020
EQ; k1; -1:0000000001 1:0000010010 1:1000000010
EQ; k4; 1:0000000011 1:0000001010 -1:0000010020 -1:0001000001 1:0001010010
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
NEQ; L1; -1:0000000001 1:0000010010
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
SYSTEM 4
EQ; k3; 1:0000000001 -1:0000000020 1:0001000010 1:0010000010
EQ; k1; -1:0000000100 1:0000001010 1:1000000001 1:1000000020
EQ; k5; 1:0000000010 1:0000100000
EQ; k2; -1:0000000100 1:0000001010 1:0100000001 1:0100000020
EQ; L1; -1:0000000002 -1:0000000021 2:0000000110 -2:0000001020 1:0000010011 1:0000010030
EQ; L2; -1:0000000102 -2:0000000121 -1:0000000140 1:0000000210 -2:0000001120 1:0000002030
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 5
EQ; k3; 1:0000000001 -1:0000000020 1:0001000010 1:0010000010
EQ; k1; 1:1000000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000001 1:0000010010
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000011 1:0000000030
NEQ; S2; 1:0000000001
SYSTEM 6
EQ; k3; -1:0000000010 1:0001000000 1:0010000000
EQ; k1; -1:0000000100 1:0000001010 1:1000000020
EQ; k2; -1:0000000100 1:0000001010 1:0100000020
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 2:0000000100 -2:0000001010 1:0000010020
EQ; L2; -1:0000000130 1:0000000200 -2:0000001110 1:0000002020
NEQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 7
EQ; k3; -1:0000000010 1:0001000000 1:0010000000
EQ; k1; 1:1000000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
NEQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 8
EQ; k3; 2:0000000001 1:0001000010 1:0010000010
EQ; k1; -1:0000000001 1:0000010010 2:1000000010
EQ; k2; -1:0000000001 1:0000010010 2:0100000010
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; -1:0000000002 4:0000000110 2:0000010011 1:0000020001
EQ; L2; 1:0000000110 1:0000001001
NEQ; L3; 1:0000000100
EQ; S1; 1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 9
EQ; k3; 2:0000000001 1:0001000010 1:0010000010
EQ; k1; 1:1000000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000000010 1:0000100000
EQ; L1; 1:0000000010 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000001 1:0000000020
NEQ; S2; 1:0000000001
SYSTEM 10
EQ; k3; 1:0000001000 1:0001010000 1:0002000000 1:0011000000 1:0100010000 2:0101000000 1:0200000000
EQ; k1; -1:0000001000 -1:0100010000 -1:0101000000 -1:0200000000 1:1001000000
NEQ; k4; 1:0001000000
EQ; k5; 1:0000100000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 11
EQ; k3; 1:0000010000 1:0010000000 1:0100000000 1:1000000000
EQ; k4; 1:0001000000
EQ; k2; 1:0000001000 1:0100010000 1:0200000000
EQ; k5; 1:0000100000
NEQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 12
EQ; k3; 1:0010000000 1:1000000000
EQ; k4; 1:0001000000
EQ; k2; 1:0000010000 1:0100000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 13
EQ; k3; 1:0000010000 1:0010000000 1:1000000000
EQ; k4; 1:0001000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
NEQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 14
EQ; k3; 1:0000010000 2:0010000000 2:1000000000
EQ; k4; 1:0001000000
EQ; k2; 1:0000010000 2:0100000000
EQ; k5; 1:0000100000
EQ; L1; -4:0000001000 1:0000020000
NEQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
SYSTEM 15
EQ; k3; 1:0010000000 1:1000000000
EQ; k4; 1:0001000000
EQ; k2; 1:0100000000
EQ; k5; 1:0000100000
EQ; L1; 1:0000010000
EQ; L2; 1:0000001000
EQ; L3; 1:0000000100
EQ; S1; 1:0000000010
EQ; S2; 1:0000000001
)SYS", 0x10cd8181bd0f0da5ULL},
}};

}  // namespace phasekit::detail
