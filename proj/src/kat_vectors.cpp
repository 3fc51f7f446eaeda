// Copyright 2026 The prnglab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prnglab/kat.hpp"

namespace prnglab {

// Captured from the designers' reference implementations.
const std::vector<KatVector>& builtin_kat_vectors() {
  static const std::vector<KatVector> kVectors = {
      {"mrg32k3a", "state-0",
       "12345 12345 12345 12345 12345 12345",
       {0x3fc041e683b58b4bULL, 0x3fd462c171103d2cULL, 0x3fd3c9b42453e25eULL, 0x3fea6d566678d634ULL}, 0x3fef8df4788356a3ULL},
      {"mrg32k3a", "state-1",
       "1 2 3 4 5 6",
       {0x3f508a240d703d4bULL, 0x3fe30a456018585fULL, 0x3fd6e6c2d51b7e4eULL, 0x3fcc75aa099f9a29ULL}, 0x3feb9895efcbf9d4ULL},
      {"mrg32k3a", "state-2",
       "4294967086 4294967085 4294967084 4294944442 4294944441 4294944440",
       {0x3feffca3df3d4526ULL, 0x3fb27d4a0b05cc29ULL, 0x3fdd6937b8657d47ULL, 0x3fe14ca3658e44c3ULL}, 0x3fe669683d35a4b2ULL},
      {"mt19937", "init-genrand-5489",
       "5489",
       {0xd091bb5cULL, 0x22ae9ef6ULL, 0xe7e1faeeULL, 0xd5c31f79ULL}, 0x4fee4f80ULL},
      {"mt19937", "init-genrand-0",
       "0",
       {0x8c7f0aacULL, 0x97c4aa2fULL, 0xb716a675ULL, 0xd821ccc0ULL}, 0xb5676398ULL},
      {"mt19937", "init-genrand-1",
       "1",
       {0x6ac1f425ULL, 0xff4780ebULL, 0xb8672f8cULL, 0xeebc1448ULL}, 0x20b7f5b2ULL},
      {"mt19937_res53", "init-genrand-5489",
       "5489",
       {0x3fea1237688aba7bULL, 0x3fecfc3f5f570c7dULL, 0x3fc0411a9f807b7cULL, 0x3fed3a6000e256bfULL}, 0x3febbc6a47ad8cd7ULL},
      {"mt19937_res53", "init-genrand-0",
       "0",
       {0x3fe18fe1565f12a8ULL, 0x3fe6e2d4cf608733ULL, 0x3fe349d66b6e894bULL, 0x3fe16faedb6395f5ULL}, 0x3fe5ab23e79781c2ULL},
      {"mt19937_res53", "init-genrand-1",
       "1",
       {0x3fdab07d0ffa3c06ULL, 0x3fe70ce5f3baf051ULL, 0x3f1dfb906661c000ULL, 0x3fd3596ab7fe08f4ULL}, 0x3fe8c8848c20f7e2ULL},
      {"pcg32", "srandom-42-54",
       "185706b82c2e03f8 000000000000006d",
       {0xa15c02b7ULL, 0x7b47f409ULL, 0xba1d3330ULL, 0x83d2f293ULL}, 0x0a47c376ULL},
      {"pcg32", "srandom-default",
       "ea1b84321029ee21 b47c73972972b7b7",
       {0x1bbeb4f2ULL, 0xe82e89e9ULL, 0x681cfdebULL, 0xe00fa2ecULL}, 0x64f97212ULL},
      {"pcg32", "index-7-warmup",
       "6a3dad3d18167a3c 0000000000000001",
       {0xb2723db7ULL, 0x4d779610ULL, 0x5d06c7bfULL, 0xb8cbe2d2ULL}, 0x046b018cULL},
      {"philox4x32", "kat-0",
       "00000000 00000000 00000000 00000000 00000000 00000000",
       {0x6627e8d5ULL, 0xe169c58dULL, 0xbc57ac4cULL, 0x9b00dbd8ULL}, 0x1dfd5582ULL},
      {"philox4x32", "kat-1",
       "ffffffff ffffffff ffffffff ffffffff ffffffff ffffffff",
       {0x408f276dULL, 0x41c83b0eULL, 0xa20bc7c6ULL, 0x6d5451fdULL}, 0x180dd72aULL},
      {"philox4x32", "kat-2",
       "a4093822 299f31d0 243f6a88 85a308d3 13198a2e 03707344",
       {0xd16cfe09ULL, 0x94fdccebULL, 0x5001e420ULL, 0x24126ea1ULL}, 0x50af6cebULL},
      {"splitmix64", "state-0",
       "0000000000000000",
       {0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL, 0x06c45d188009454fULL, 0xf88bb8a8724c81ecULL}, 0x14e0abb2bfcf7c3eULL},
      {"splitmix64", "state-1",
       "0000000000000001",
       {0x910a2dec89025cc1ULL, 0xbeeb8da1658eec67ULL, 0xf893a2eefb32555eULL, 0x71c18690ee42c90bULL}, 0xe71894b1b5034fb7ULL},
      {"splitmix64", "state-2",
       "0123456789abcdef",
       {0x157a3807a48faa9dULL, 0xd573529b34a1d093ULL, 0x2f90b72e996dccbeULL, 0xa2d419334c4667ecULL}, 0x176694cc0cb5d669ULL},
      {"xoshiro1024ss", "splitmix64-0",
       "e220a8397b1dcdaf 6e789e6aa1b965f4 06c45d188009454f f88bb8a8724c81ec 1b39896a51a8749b 53cb9f0c747ea2ea 2c829abe1f4532e1 c584133ac916ab3c 3ee5789041c98ac3 f3b8488c368cb0a6 657eecdd3cb13d09 c2d326e0055bdef6 8621a03fe0bbdb7b 8e1f7555983aa92f b54e0f1600cc4d19 84bb3f97971d80ab 0",
       {0x99ec5f36cb75f2b4ULL, 0x422ea740d0977210ULL, 0x47bace0bb96b41d5ULL, 0x8e93d82d4e3fa1e4ULL}, 0xc6e6303b69d5673fULL},
      {"xoshiro1024ss", "splitmix64-1",
       "910a2dec89025cc1 beeb8da1658eec67 f893a2eefb32555e 71c18690ee42c90b 71bb54d8d101b5b9 c34d0bff90150280 e099ec6cd7363ca5 85e7bb0f12278575 491718de357e3da8 cb435c8e74616796 6775dc7701564f61 9afcd44d14cf8bfe 7476cf8a4baa5dc0 87b341d690d7a28a 6f9b6dae6f4c57a8 2ac2ce17a5794a3b 0",
       {0xb3f2af6d0fc710c5ULL, 0xf9d20113ec80c6d5ULL, 0x8253bcf0deab787cULL, 0xf6f50e5ea678c37cULL}, 0xac26c6400cb607e1ULL},
      {"xoshiro1024ss", "splitmix64-42",
       "bdd732262feb6e95 28efe333b266f103 47526757130f9f52 581ce1ff0e4ae394 09bc585a244823f2 de4431fa3c80db06 37e9671c45376d5d ccf635ee9e9e2fa4 5705b8770b3d7dd5 9e54d738297f77ae 3474724a775b19bf 7e348a0e451650be 836ded897f3e46e6 851f977347ed6db7 aa47e31c02e78edc 341452c54d7c33f2 0",
       {0x15780b2e0c2ec716ULL, 0xbe15272cdf80b6c2ULL, 0x89dceac19500853cULL, 0x0dc3ec305728c5d8ULL}, 0x0dc2baf77d24b46cULL},
      {"xoshiro256pp", "splitmix64-0",
       "e220a8397b1dcdaf 6e789e6aa1b965f4 06c45d188009454f f88bb8a8724c81ec",
       {0x53175d61490b23dfULL, 0x61da6f3dc380d507ULL, 0x5c0fdf91ec9a7bfcULL, 0x02eebf8c3bbe5e1aULL}, 0x376300fa032f6483ULL},
      {"xoshiro256pp", "splitmix64-1",
       "910a2dec89025cc1 beeb8da1658eec67 f893a2eefb32555e 71c18690ee42c90b",
       {0xcfc5d07f6f03c29bULL, 0xbf424132963fe08dULL, 0x19a37d5757aaf520ULL, 0xbf08119f05cd56d6ULL}, 0x92d52100f9e1da0dULL},
      {"xoshiro256pp", "splitmix64-42",
       "bdd732262feb6e95 28efe333b266f103 47526757130f9f52 581ce1ff0e4ae394",
       {0xd0764d4f4476689fULL, 0x519e4174576f3791ULL, 0xfbe07cfb0c24ed8cULL, 0xb37d9f600cd835b8ULL}, 0xa3ed059c1cc38790ULL},
      {"xoshiro256ss", "splitmix64-0",
       "e220a8397b1dcdaf 6e789e6aa1b965f4 06c45d188009454f f88bb8a8724c81ec",
       {0x99ec5f36cb75f2b4ULL, 0xbf6e1f784956452aULL, 0x1a5f849d4933e6e0ULL, 0x6aa594f1262d2d2cULL}, 0x7aac8c483a2edd2fULL},
      {"xoshiro256ss", "splitmix64-1",
       "910a2dec89025cc1 beeb8da1658eec67 f893a2eefb32555e 71c18690ee42c90b",
       {0xb3f2af6d0fc710c5ULL, 0x853b559647364ceaULL, 0x92f89756082a4514ULL, 0x642e1c7bc266a3a7ULL}, 0xb8517c33c344d153ULL},
      {"xoshiro256ss", "splitmix64-42",
       "bdd732262feb6e95 28efe333b266f103 47526757130f9f52 581ce1ff0e4ae394",
       {0x15780b2e0c2ec716ULL, 0x6104d9866d113a7eULL, 0xae17533239e499a1ULL, 0xecb8ad4703b360a1ULL}, 0x8de5848c61ab8968ULL},
  };
  return kVectors;
}

}  // namespace prnglab
