import io
import json
import os
import shutil
import tempfile
from typing import List, Tuple
from unittest import mock

from normtrace_app import dispatch
from utils.cache_manager import ResultCache, get_result_cache
from utils.schemas import RunConfig, VerifyCheck, VerifyReport

from .base_test import NormTraceTest

EXAMPLE_GHW = ["ghw", "--q", "3", "--s", "2", "--u", "4", "--monomials", "deg<=4", "--r", "3", "--format", "json"]


def run(argv: List[str]) -> Tuple[int, str]:
    """运行命令行并截获标准输出"""
    with mock.patch("sys.stdout", new_callable=io.StringIO) as out, mock.patch("sys.stderr", new_callable=io.StringIO):
        code = dispatch(argv)
    return code, out.getvalue()


class CliTest(NormTraceTest):
    """command line dispatch, formats and exit codes"""

    def setUp(self):
        super().setUp()
        self.cache_dir = tempfile.mkdtemp()

    def tearDown(self):
        super().tearDown()
        shutil.rmtree(self.cache_dir, ignore_errors=True)

    def test_ghw_json(self):
        code, out = run(EXAMPLE_GHW + ["--no-cache"])
        self.assertEqual(code, 0)
        self.result = json.loads(out)
        self.assertEqual(self.result["schema"], 1)
        row = self.result["results"][0]
        self.assertEqual((row["r"], row["d_r"], row["cartesian"], row["singleton"]), (3, 17, 9, 27 - 12 + 3))

    def test_ghw_output_is_reproducible(self):
        _, serial = run(EXAMPLE_GHW + ["--no-cache", "--threads", "1"])
        _, parallel = run(EXAMPLE_GHW + ["--no-cache", "--threads", "2"])
        self.assertEqual(serial, parallel)
        self.assertNotIn("elapsed", serial)

    def test_ghw_hierarchy_csv(self):
        code, out = run(["ghw", "--q", "3", "--s", "2", "--u", "2", "--monomials", "deg<=4", "--hierarchy", "--method", "fastpath", "--format", "csv", "--no-cache"])
        self.assertEqual(code, 0)
        lines = out.split("\n")
        self.assertEqual(lines[0].split(",")[:2], ["r", "d_r"])
        self.assertEqual(len([line for line in lines if line]), 13)
        self.assertNotIn("\r", out)

    def test_quantum(self):
        code, out = run(["quantum", "--q", "5", "--s", "2", "--u", "3", "--lambda1", "8", "--lambda2", "6", "--format", "json", "--no-cache"])
        self.assertEqual(code, 0)
        row = json.loads(out)["rows"][0]
        self.assertEqual((row["n"], row["k"], row["delta_z"], row["delta_x"], row["impure"]), (65, 1, 57, 4, True))

    def test_quantum_table_text(self):
        code, out = run(["quantum-table", "--preset", "q3s2u2", "--no-cache"])
        self.assertEqual(code, 0)
        self.assertIn("[[15,1,13/2]]", out)
        self.assertIn("# printed as [[15,1,7,7]]", out)

        code, out = run(["quantum-table", "--preset", "q3s2u2", "--format", "json", "--no-cache"])
        self.assertEqual(code, 0)
        self.assertTrue(all(row["matches_published"] for row in json.loads(out)["rows"]))

    def test_rghw_lambdas(self):
        code, out = run(["rghw", "--q", "5", "--s", "2", "--u", "3", "--lambda1", "8", "--lambda2", "6", "--r", "1", "--format", "json", "--no-cache"])
        self.assertEqual(code, 0)
        row = json.loads(out)["results"][0]
        self.assertEqual((row["M_r"], row["exact"], row["condition_held"]), (57, True, True))

    def test_field_curve_code(self):
        code, out = run(["field", "--q", "4", "--s", "2", "--format", "json"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["order"], 16)

        code, out = run(["curve", "--q", "2", "--s", "2", "--u", "1", "--points", "--format", "json"])
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["points"]), 4)

        code, out = run(["code", "--q", "2", "--s", "2", "--u", "1", "--monomials", "list:1,y", "--dual", "structural", "--min-weight", "--format", "json"])
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual((report["n"], report["k"], report["dual_dimension"], report["min_weight"]), (4, 2, 2, 3))

    def test_exit_codes(self):
        self.assertEqual(run(["curve", "--q", "7", "--s", "2", "--u", "5"])[0], 2)
        self.assertEqual(run(["ghw", "--q", "3", "--s", "2", "--u", "2", "--monomials", "deg<=x", "--r", "1", "--no-cache"])[0], 2)
        self.assertEqual(run(["ghw", "--bogus"])[0], 2)
        self.assertEqual(run(["field", "--q", "2", "--s", "17"])[0], 2)
        budget = ["ghw", "--q", "5", "--s", "2", "--u", "3", "--monomials", "wdeg<=8", "--r", "2", "--method", "oracle", "--budget", "10", "--no-cache"]
        self.assertEqual(run(budget)[0], 3)

    def test_verify(self):
        code, out = run(["verify", "--suite", "closed-form", "--format", "json"])
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["passed"])
        self.assertEqual(len(report["checks"]), 1000)

    def test_verify_failure(self):
        failing = VerifyReport(suite="oracle", checks=[VerifyCheck(name="broken", passed=False, detail="expected 1, got 2")])
        with mock.patch("normtrace_app.run_suite", return_value=failing):
            code, out = run(["verify", "--suite", "oracle"])
        self.assertEqual(code, 1)
        self.assertIn("broken", out)

    def test_cache_roundtrip(self):
        argv = EXAMPLE_GHW + ["--cache-dir", self.cache_dir]
        first = run(argv)
        with mock.patch.dict("normtrace_app.COMMANDS", {"ghw": mock.Mock(side_effect=AssertionError("recomputed"))}):
            second = run(argv)
        self.assertEqual(first, second)
        self.assertEqual(len(get_result_cache(self.cache_dir).index), 1)

    def test_corrupted_entry(self):
        argv = EXAMPLE_GHW + ["--cache-dir", self.cache_dir]
        first = run(argv)
        cache = get_result_cache(self.cache_dir)
        (key,) = cache.index
        with open(os.path.join(self.cache_dir, f"{key}.json"), "w", encoding="utf-8") as f:
            f.write('{"results": [')
        self.assertEqual(run(argv), first)
        with open(os.path.join(self.cache_dir, f"{key}.json"), "r", encoding="utf-8") as f:
            self.assertEqual(json.load(f)["results"][0]["d_r"], 17)

    def test_cache_keys(self):
        base = dict(command="ghw", q=3, s=2, u=4, monomial_spec="deg<=4", options={"r": 3})
        self.assertNotEqual(
            ResultCache.key_for(RunConfig(**base)),
            ResultCache.key_for(RunConfig(**base, modulus=[2, 2, 1])),
        )
        self.assertEqual(
            ResultCache.key_for(RunConfig(**base, output="json")),
            ResultCache.key_for(RunConfig(**base, output="csv", threads=4)),
        )

    def test_threads_env(self):
        with mock.patch.dict(os.environ, {"NORMTRACE_THREADS": "2"}):
            code, out = run(["quantum-table", "--q", "3", "--s", "2", "--u", "2", "--rows", "2:0,4:3:3", "--format", "json", "--no-cache"])
        self.assertEqual(code, 0)
        rows = json.loads(out)["rows"]
        self.assertEqual([(r["delta_z"], r["delta_x"]) for r in rows], [(13, 2), (11, 3)])
        self.assertEqual(rows[1]["g"], "3")
