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

/* Test-only reference oracles transcribed from the generator designers' code. */
#ifndef PRNGLAB_TESTS_ORACLE_REFERENCE_H_
#define PRNGLAB_TESTS_ORACLE_REFERENCE_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

void ref_splitmix64_seed(uint64_t seed);
uint64_t ref_splitmix64_next(void);

void ref_xoshiro256pp_set(const uint64_t st[4]);
uint64_t ref_xoshiro256pp_next(void);
void ref_xoshiro256ss_set(const uint64_t st[4]);
uint64_t ref_xoshiro256ss_next(void);

void ref_xoroshiro1024ss_set(const uint64_t st[16], int pos);
int ref_xoroshiro1024ss_p(void);
uint64_t ref_xoroshiro1024ss_next(void);

void ref_mrg32k3a_set(const double st[6]);
double ref_mrg32k3a_next(void);

void ref_philox4x32_10(const uint32_t in[4], const uint32_t k[2], uint32_t out[4]);

void ref_pcg32_srandom(uint64_t initstate, uint64_t initseq);
void ref_pcg32_set(uint64_t state, uint64_t inc);
uint64_t ref_pcg32_state(void);
uint32_t ref_pcg32_next(void);

void init_genrand(unsigned long s);
unsigned long genrand_int32(void);
double genrand_res53(void);

#ifdef __cplusplus
}
#endif

#endif
