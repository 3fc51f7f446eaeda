# Copyright 2026 The prnglab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import io
import json
import os
import subprocess

import numpy as np
import pytest

import prnglab


def test_generators_and_kats():
    names = prnglab.generator_names()
    assert "xoshiro256pp" in names and "randu" in names
    checks = prnglab.kat_check()
    assert len(checks) == 27
    assert all(c["ok"] for c in checks)
    assert all(c["ok"] for c in prnglab.kat_check("pcg32"))


def test_words_are_deterministic_and_match_splitmix64():
    a = prnglab.words("splitmix64", seed=0, half="low", count=4)
    b = prnglab.words("splitmix64", seed=0, half="low", count=4)
    assert a.dtype == np.uint32
    np.testing.assert_array_equal(a, b)
    # splitmix64 from state 0: first output e220a8397b1dcdaf.
    assert int(a[0]) == 0x7B1DCDAF
    high = prnglab.words("splitmix64", seed=0, half="high", count=1)
    assert int(high[0]) == 0xE220A839
    alt = prnglab.words("splitmix64", seed=0, half="alternating", count=2)
    assert [int(x) for x in alt] == [0x7B1DCDAF, 0xE220A839]


def test_pcg32_seed_zero_word_is_zero():
    assert int(prnglab.words("pcg32", seed=0, count=1)[0]) == 0
    assert prnglab.initial_state("pcg32", 0).startswith("pcg32 ")


def test_errors_map_to_value_error():
    with pytest.raises(prnglab.ConfigError):
        prnglab.words("nosuch")
    with pytest.raises(ValueError):
        prnglab.words("pcg32", half="low")
    with pytest.raises(prnglab.ArgumentError):
        prnglab.headroom(64, "megacrush")
    with pytest.raises(prnglab.ConfigError):
        prnglab.classify(0.5, suspicious=1e-16, decisive=1e-3)


def test_arithmetic():
    assert prnglab.headroom(128, "bigcrush") == 92
    assert prnglab.format_percent(43 / 2002, 1) == "2.1%"
    assert prnglab.format_percent(1397 / 2002, 2) == "69.78%"
    assert prnglab.format_percent(prnglab.multiple_testing_probability(160, 0.002), 1) == "27.4%"
    assert prnglab.classify(0.5) == "pass"
    assert prnglab.classify(0.0005) == "suspicious"
    assert prnglab.classify(3e-16) == "decisive"


def test_profiles():
    assert prnglab.profile_names() == ["smoke", "desk", "deep"]
    assert prnglab.profile_words("smoke") < prnglab.profile_words("desk") < prnglab.profile_words("deep")
    assert prnglab.profile_words("desk") <= 10**8
    assert prnglab.profile_text("desk").startswith("profile = desk\n")


def test_battery_run():
    run = prnglab.run_battery("philox4x32", seed=1, profile="smoke")
    assert run["verdict"] in ("PASS", "FAIL")
    assert len(run["results"]) == 17
    assert run["report"].rstrip("\n").splitlines()[-1].startswith("# summary: total=")
    for r in run["results"]:
        for s in r["stats"]:
            assert 0.0 <= s["p"] <= 1.0
    randu = prnglab.run_battery("randu", seed=0, profile="smoke")
    assert randu["verdict"] == "FAIL"


def test_campaign_and_report(tmp_path):
    out = tmp_path / "reports"
    res = prnglab.run_campaign("xoshiro256ss", "0..2", profile="smoke", out=str(out), workers=2)
    assert res["planned"] == 4 and res["written"] == 4 and not res["errors"]
    assert sorted(p.name for p in out.iterdir()) == [
        "smoke_xoshiro256ss_00000_high.txt",
        "smoke_xoshiro256ss_00000_low.txt",
        "smoke_xoshiro256ss_00001_high.txt",
        "smoke_xoshiro256ss_00001_low.txt",
    ]
    again = prnglab.run_campaign("xoshiro256ss", "0..2", profile="smoke", out=str(out), workers=1)
    assert again["skipped"] == 4 and again["written"] == 0

    rows = list(csv.DictReader(io.StringIO(prnglab.report(str(out), format="csv"))))
    assert len(rows) == 17  # one row per test id
    assert all(r["streams"] == "4" for r in rows)
    agg = json.loads(prnglab.report(str(out), format="json"))
    assert agg["profiles"] == ["smoke"]
    assert "generator" in prnglab.report(str(out))


@pytest.mark.skipif("PRNGLAB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_bindings(tmp_path):
    cli = os.environ["PRNGLAB_CLI"]
    raw = subprocess.run([cli, "gen", "--generator", "mt19937", "--seed", "5", "--count", "256"],
                         check=True, capture_output=True).stdout
    np.testing.assert_array_equal(np.frombuffer(raw, dtype="<u4"), prnglab.words("mt19937", seed=5, count=256))

    config = tmp_path / "campaign.cfg"
    config.write_text("# smoke campaign\ngenerator = pcg32\nseeds = 3..5\nprofile = smoke\nworkers = 1\n")
    out = tmp_path / "out"
    subprocess.run([cli, "run", "--config", str(config), "--out", str(out), "--seeds", "4..5"], check=True,
                   capture_output=True)
    assert [p.name for p in out.iterdir()] == ["smoke_pcg32_00004.txt"]
    single = subprocess.run([cli, "battery", "--generator", "pcg32", "--seed", "4", "--profile", "smoke"],
                            check=True, capture_output=True, text=True).stdout
    assert single == (out / "smoke_pcg32_00004.txt").read_text()

    bad = subprocess.run([cli, "run", "--generator", "pcg32", "--seeds", "5..5", "--out", str(out)],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    kat = subprocess.run([cli, "kat"], capture_output=True, text=True)
    assert kat.returncode == 0
