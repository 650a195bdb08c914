"""End-to-end checks of the kummer executable: exit codes, schema validity, replay, determinism."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = None
ROOT = None


def run(args, stdin=None):
    p = subprocess.run([BIN] + args, input=stdin, capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def config(name):
    return os.path.join(ROOT, "configs", name)


def schema(name):
    with open(os.path.join(ROOT, "schemas", name)) as f:
        return json.load(f)


def strip_timings(text):
    j = json.loads(text)
    j.pop("timings", None)
    return json.dumps(j, sort_keys=False)


class ExitCodes(unittest.TestCase):
    def test_theorem_configs(self):
        cases = [
            (["check-a", config("theorem_a_fixture.conf")], 0),
            (["check-a", config("theorem_a_bad_degree.conf")], 3),
            (["check-b", config("theorem_b_theta.conf")], 0),
            (["check-b", config("theorem_b_lambda_one.json")], 1),
            (["check-b", config("theorem_b_undecided.conf")], 2),
        ]
        for args, code in cases:
            rc, out, err = run(args)
            self.assertEqual(rc, code, args[-1] + "\n" + err)
            if code != 3:
                jsonschema.validate(json.loads(out), schema("report.schema.json"))
                self.assertIn("overall:", err)

    def test_tool_configs(self):
        cases = [
            (["tools", "galois", config("galois_quintic.conf")], 0),
            (["tools", "cohomology", config("cohomology_m5.conf")], 0),
            (["tools", "kummer-eqs", config("kummer_eqs_lambda_one.conf")], 0),
            (["tools", "locsol", config("locsol_surface_a.conf")], 1),
            (["tools", "find-prime", config("find_prime.conf")], 0),
        ]
        for args, code in cases:
            rc, out, err = run(args)
            self.assertEqual(rc, code, args[-2] + "\n" + err)
            jsonschema.validate(json.loads(out), schema("tool.schema.json"))

    def test_input_errors(self):
        bad = [
            "g1 = x^4 - x - 1\ng2 = x^4 + x + 1\nw1 = 283\nw2 = 4\n",
            "g1 = x^4 - x - 1\ng2 = x^4 + x + 1\nw1 = 283\nw2 = 229\ncolour = blue\n",
            "g1 = x^4 - x - 1\ng2 = x^4 + x + 1\nw1 = 283\n",
            "g1 = x^4 - x - 1\ng1 = x^4 + x + 1\nw1 = 283\nw2 = 229\n",
            "g1 = x^4 - x -* 1\ng2 = x^4 + x + 1\nw1 = 283\nw2 = 229\n",
            '{"g1": [-1, -1, 0, 0, 1.5], "g2": [1, 1, 0, 0, 1], "w1": 283, "w2": 229}',
            "{not json",
        ]
        for text in bad:
            rc, out, err = run(["check-a", "-"], stdin=text)
            self.assertEqual(rc, 3, text + "\n" + err)
            self.assertEqual(out, "")
        rc, _, _ = run(["check-b", "-"], stdin="f = x^5 - x - 1\nw = 2\n")
        self.assertEqual(rc, 3)
        rc, _, _ = run(["check-a", "--effort", "extreme", config("theorem_a_fixture.conf")])
        self.assertEqual(rc, 3)
        rc, _, _ = run(["tools", "find-prime", "-"], stdin="f = x^5 - x - 1\ntarget = [3, 1]\n")
        self.assertEqual(rc, 3)

    def test_lambda_defaults_to_one_with_warning(self):
        rc, out, err = run(["check-b", "-"], stdin="f = x^5 - x - 1\nw = 19\n")
        self.assertEqual(rc, 1)
        self.assertIn("warning", err)
        self.assertIn("rational line", err)
        self.assertEqual(json.loads(out)["inputs"]["lambda"], ["1"])

    def test_kummer_eqs_norm(self):
        rc, out, _ = run(["tools", "kummer-eqs", config("kummer_eqs_lambda_one.conf")])
        result = json.loads(out)["result"]
        self.assertEqual(result["norm"], "1")
        self.assertIn("-1", result["quadrics"][2][5])


class Replay(unittest.TestCase):
    def test_inputs_reparse_into_the_same_report(self):
        for cmd, cfg in [("check-a", "theorem_a_fixture.conf"), ("check-b", "theorem_b_undecided.conf"),
                         ("check-b", "theorem_b_lambda_one.json")]:
            rc1, out1, _ = run([cmd, config(cfg)])
            inputs = json.loads(out1)["inputs"]
            rc2, out2, _ = run([cmd, "-"], stdin=json.dumps(inputs))
            self.assertEqual(rc1, rc2)
            self.assertEqual(strip_timings(out1), strip_timings(out2), cfg)

    def test_same_seed_gives_identical_reports(self):
        args = ["check-b", "--seed", "7", "--keep-going", config("theorem_b_undecided.conf")]
        _, a, _ = run(args)
        _, b, _ = run(args)
        self.assertEqual(strip_timings(a), strip_timings(b))
        self.assertEqual(json.loads(a)["inputs"]["seed"], 7)

    def test_out_file_and_expression_equals_list(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            rc, out, _ = run(["check-a", "--out", path, config("theorem_a_fixture.conf")])
            self.assertEqual(rc, 0)
            self.assertEqual(out, "")
            with open(path) as f:
                report = json.load(f)
            self.assertEqual(report["inputs"]["g1"], ["-1", "-1", "0", "0", "1"])
            self.assertEqual(report["inputs"]["g2"], ["1", "1", "0", "0", "1"])


if __name__ == "__main__":
    BIN = sys.argv.pop(1)
    ROOT = sys.argv.pop(1)
    unittest.main()
