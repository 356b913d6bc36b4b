#!/usr/bin/env python3
"""End-to-end checks of the morselab command line.

usage: cli_test.py <morselab executable> <tests/data directory>
"""
import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = None
DATA = None


def pres(name):
    return os.path.join(DATA, "corpus", name + ".pres")


def diagram(name):
    return os.path.join(DATA, "diagrams", name + ".json")


def run(*args, cwd=None):
    p = subprocess.run([EXE, *args], capture_output=True, text=True, cwd=cwd,
                       timeout=300)
    return p.returncode, p.stdout


def run_json(*args, cwd=None):
    rc, out = run(*args, cwd=cwd)
    return rc, json.loads(out)


class Envelope(unittest.TestCase):
    def test_json_fields(self):
        rc, j = run_json("--seed", "5", "pieces", pres("genus2"))
        self.assertEqual(rc, 0)
        for key in ("tool", "version", "command", "config_hash", "config",
                    "result"):
            self.assertIn(key, j)
        self.assertEqual(j["tool"], "morselab")
        self.assertEqual(j["command"], "pieces")
        self.assertEqual(j["config"]["seed"], 5)
        self.assertEqual(len(j["config_hash"]), 16)

    def test_hash_follows_config(self):
        _, a = run_json("--seed", "5", "pieces", pres("genus2"))
        _, b = run_json("--seed", "6", "pieces", pres("genus2"))
        _, c = run_json("--seed", "5", "pieces", pres("genus2"))
        self.assertNotEqual(a["config_hash"], b["config_hash"])
        self.assertEqual(a["config_hash"], c["config_hash"])

    def test_csv_comment_line(self):
        rc, out = run("--seed", "3", "ball", "--radius", "3", pres("free2"))
        self.assertEqual(rc, 0)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith("# morselab "))
        self.assertIn(" ball config ", lines[0])
        self.assertTrue(lines[0].endswith(" seed 3"))
        self.assertNotIn("#", lines[1])

    def test_out_option(self):
        with tempfile.TemporaryDirectory() as d:
            rc, out = run("--out", "p.json", "pieces", pres("genus2"), cwd=d)
            self.assertEqual(rc, 0)
            self.assertEqual(out, "")
            with open(os.path.join(d, "p.json")) as f:
                self.assertEqual(json.load(f)["command"], "pieces")


class ExitCodes(unittest.TestCase):
    def test_check_pass(self):
        rc, j = run_json("check", "--lambda", "1/9", pres("genus3"))
        self.assertEqual(rc, 0)
        self.assertEqual(j["result"]["verdict"], "PASS")

    def test_check_fail_has_witness(self):
        rc, j = run_json("check", "--lambda", "1/6", pres("z2"))
        self.assertEqual(rc, 1)
        self.assertEqual(j["result"]["verdict"], "FAIL")
        w = j["result"]["witness"]
        self.assertEqual(w["relator_length"], 4)
        self.assertGreaterEqual(6 * w["piece_length"], w["relator_length"])

    def test_malformed_presentation(self):
        with tempfile.TemporaryDirectory() as d:
            bad = os.path.join(d, "bad.pres")
            with open(bad, "w") as f:
                f.write("gens: a b\nrels: a#b\n")
            rc, j = run_json("check", "--lambda", "1/6", bad)
        self.assertEqual(rc, 2)
        self.assertEqual(j["error"]["kind"], "parse")
        self.assertIn("line 2", j["error"]["message"])

    def test_missing_file(self):
        rc, j = run_json("pieces", "/nonexistent/x.pres")
        self.assertEqual(rc, 2)
        self.assertIn("error", j)

    def test_usage_error(self):
        rc, j = run_json("check", "--lambda")
        self.assertEqual(rc, 2)
        self.assertEqual(j["error"]["kind"], "usage")

    def test_ball_needs_small_cancellation(self):
        rc, j = run_json("ball", "--radius", "2", pres("z2"))
        self.assertEqual(rc, 2)
        self.assertEqual(j["error"]["kind"], "not_verified")


class Diagrams(unittest.TestCase):
    def test_classify_ladder(self):
        rc, j = run_json("diagram", "classify", diagram("ladder3"))
        self.assertEqual(rc, 0)
        self.assertEqual(j["result"]["shape"], "I1")
        self.assertEqual(j["result"]["chain"], [0, 1, 2])

    def test_violator(self):
        rc, j = run_json("diagram", "check", "--ngon", "2", diagram("bump"))
        self.assertEqual(rc, 1)
        self.assertEqual(j["result"]["verdict"], "FAIL")
        rc, j = run_json("diagram", "classify", diagram("bump"))
        self.assertNotEqual(rc, 0)
        self.assertIn("error", j)

    def test_search_roundtrip(self):
        rc, j = run_json("diagram", "search", "--boundary", "abABcdCD",
                         "--max-faces", "1", pres("genus2"))
        self.assertEqual(rc, 0)
        self.assertEqual(j["result"]["count"], 1)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "face.json")
            with open(path, "w") as f:
                json.dump(j["result"]["diagrams"][0], f)
            rc, c = run_json("diagram", "check", path)
        self.assertEqual(rc, 0)
        self.assertTrue(c["result"]["valid"])


class Automata(unittest.TestCase):
    def test_free_group_counts(self):
        with tempfile.TemporaryDirectory() as d:
            rc, _ = run("--out", "f2.json", "fsa", "build", "--radius", "4",
                        "--horizon", "1", pres("free2"), cwd=d)
            self.assertEqual(rc, 0)
            with open(os.path.join(d, "f2.json")) as f:
                build = json.load(f)
            self.assertEqual(build["result"]["geodesic_states"], 5)
            self.assertTrue(build["result"]["stabilized"])
            rc, j = run_json("fsa", "count", "--automaton", "f2.json", "--n",
                             "6", cwd=d)
            self.assertEqual(rc, 0)
            self.assertEqual(j["result"]["counts"],
                             [1] + [4 * 3 ** (n - 1) for n in range(1, 7)])
            self.assertTrue(j["result"]["infinite"])
            rc, j = run_json("fsa", "check", "--automaton", "f2.json",
                             "--word", "abAB", cwd=d)
            self.assertEqual((rc, j["result"]["accepted"]), (0, True))
            rc, j = run_json("fsa", "check", "--automaton", "f2.json",
                             "--word", "abBa", cwd=d)
            self.assertEqual((rc, j["result"]["accepted"]), (1, False))


class Snapshots(unittest.TestCase):
    def test_snapshot_queries(self):
        with tempfile.TemporaryDirectory() as d:
            rc, _ = run("ball", "--radius", "4", "--snapshot", "g.ball",
                        pres("genus2"), cwd=d)
            self.assertEqual(rc, 0)
            with open(os.path.join(d, "g.ball"), "rb") as f:
                self.assertEqual(f.read(8), b"MLBALL\x00\x01")
            rc, j = run_json("dist", "--snapshot", "g.ball", "--from", "ab",
                             "--to", "cd", cwd=d)
            self.assertEqual(rc, 0)
            self.assertEqual(j["result"]["distance"], 4)


class Walks(unittest.TestCase):
    MU = ('{"support":[{"word":"a","p":"1/4"},{"word":"A","p":"1/4"},'
          '{"word":"b","p":"1/4"},{"word":"B","p":"1/4"}],"generates":true}')

    def test_jobs_do_not_change_output(self):
        with tempfile.TemporaryDirectory() as d:
            with open(os.path.join(d, "mu.json"), "w") as f:
                f.write(self.MU)
            outs = []
            for jobs in ("1", "3"):
                rc, out = run("--seed", "11", "--jobs", jobs, "walk", "--mu",
                              "mu.json", "--steps", "30", "--count", "500",
                              "--radius", "2", pres("free2"), cwd=d)
                self.assertEqual(rc, 0)
                outs.append(out)
            self.assertEqual(outs[0], outs[1])
            self.assertEqual(json.loads(outs[0])["result"]["walks"], 500)


if __name__ == "__main__":
    EXE = os.path.abspath(sys.argv[1])
    DATA = os.path.abspath(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
