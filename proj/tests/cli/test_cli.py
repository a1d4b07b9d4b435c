#!/usr/bin/env python3
"""Black-box tests for the raag command-line tool.

Usage: test_cli.py /path/to/raag
"""

import filecmp
import os
import subprocess
import sys
import tempfile
import unittest

RAAG = None


def run(*args, cwd=None):
    return subprocess.run([RAAG, *map(str, args)], cwd=cwd, capture_output=True, text=True)


class CliCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def write(self, name, text):
        with open(self.path(name), "w") as f:
            f.write(text)
        return self.path(name)

    def read(self, name):
        with open(self.path(name)) as f:
            return f.read()

    def ok(self, *args):
        r = run(*args)
        self.assertEqual(r.returncode, 0, msg=f"{args}: {r.stdout} {r.stderr}")
        return r.stdout


class WordCommands(CliCase):
    def test_check_exit_codes(self):
        edge = self.write("edge.graph", "vertices a b\nedge a b\n")
        free = self.write("free.graph", "vertices a b\n")
        comm = self.write("w.txt", "a b a^-1 b^-1\n")
        bad = self.write("bad.txt", "a^2\n")
        r = run("word", "check", "--graph", edge, "--word", comm)
        self.assertEqual((r.returncode, r.stdout), (0, "trivial\n"))
        r = run("word", "check", "--graph", free, "--word", comm)
        self.assertEqual((r.returncode, r.stdout), (1, "nontrivial\n"))
        self.assertEqual(run("word", "check", "--graph", edge, "--word", bad).returncode, 2)
        unknown = self.write("u.txt", "a z\n")
        self.assertEqual(run("word", "check", "--graph", edge, "--word", unknown).returncode, 2)
        self.assertEqual(run("word", "check", "--graph", self.path("missing"), "--word", comm).returncode, 2)

    def test_sample_then_check(self):
        g = self.path("g.graph")
        self.ok("graph", "gen", "--vertices", 6, "--edge-prob", 0.5, "--seed", 3, "--out", g)
        for flag, expected in (([], 0), (["--nontrivial"], 1)):
            w = self.path("w.txt")
            self.ok("word", "sample", "--graph", g, "--length", 20, "--seed", 9, "--out", w, *flag)
            self.assertEqual(run("word", "check", "--graph", g, "--word", w).returncode, expected)

    def test_graph_validate(self):
        self.assertEqual(run("graph", "validate", self.write("ok.graph", "vertices a b\nedge a b\n")).returncode, 0)
        r = run("graph", "validate", self.write("loop.graph", "vertices a\nedge a a\n"))
        self.assertEqual(r.returncode, 1)
        self.assertIn("loop", r.stdout)
        self.assertEqual(run("graph", "validate", self.write("junk.graph", "vertex a\n")).returncode, 2)


class Sharing(CliCase):
    def decode_all(self, out, n):
        decoded = []
        for j in range(1, n + 1):
            d = self.path(f"{os.path.basename(out)}_dec{j}.txt")
            self.ok("decode-share", "--share", os.path.join(out, f"share_{j}.txt"),
                    "--relators", os.path.join(out, f"relators_{j}.graph"), "--out", d)
            decoded.append(d)
        return decoded

    def test_nn_pipeline(self):
        out = self.path("nn")
        self.ok("deal-nn", "--secret", "10110", "-n", 4, "--seed", 8, "--out", out)
        decoded = self.decode_all(out, 4)
        r = run("reconstruct-nn", *decoded, "--expect", "10110")
        self.assertEqual((r.returncode, r.stdout), (0, "secret 10110\n"))
        self.assertEqual(run("reconstruct-nn", *decoded, "--expect", "00000").returncode, 1)
        self.assertEqual(run("reconstruct-nn", decoded[0], decoded[0]).returncode, 2)

    def test_tn_pipeline(self):
        out = self.path("tn")
        self.ok("deal-tn", "--secret", 6, "-p", 11, "-t", 3, "-n", 5, "--seed", 2, "--out", out)
        decoded = self.decode_all(out, 5)
        for subset in ([0, 1, 2], [0, 3, 4], [4, 2, 1]):
            r = run("reconstruct-tn", *[decoded[i] for i in subset], "--expect", 6)
            self.assertEqual((r.returncode, r.stdout), (0, "secret 6\n"))
        self.assertEqual(run("reconstruct-tn", decoded[0], decoded[1]).returncode, 2)
        self.assertEqual(run("reconstruct-tn", *decoded[:3], "--expect", 5).returncode, 1)

    def test_bad_inputs(self):
        out = self.path("x")
        self.assertEqual(run("deal-nn", "--secret", "10a", "-n", 2, "--seed", 1, "--out", out).returncode, 2)
        self.assertEqual(run("deal-tn", "--secret", 3, "-p", 8, "-t", 2, "-n", 3, "--seed", 1, "--out", out).returncode, 2)
        self.assertEqual(run("deal-tn", "--secret", -1, "-p", 7, "-t", 2, "-n", 3, "--seed", 1, "--out", out).returncode, 2)
        bad = self.write("bad_share.txt", "scheme nn\nparticipant 1\nk 2\nx1\n")
        rel = self.write("rel.graph", "vertices x1 x2\n")
        self.assertEqual(run("decode-share", "--share", bad, "--relators", rel).returncode, 2)

    def test_deal_is_byte_deterministic(self):
        a, b = self.path("a"), self.path("b")
        for out in (a, b):
            self.ok("deal-tn", "--secret", 4, "-p", 13, "-t", 2, "-n", 3, "--seed", 77, "--out", out)
        match, mismatch, errors = filecmp.cmpfiles(a, b, sorted(os.listdir(a)), shallow=False)
        self.assertEqual((len(match), mismatch, errors), (6, [], []))


class Auth(CliCase):
    def test_interactive_round(self):
        for scheme in ("hom", "sub"):
            key = self.path(f"key_{scheme}")
            self.ok("auth", "keygen", "--scheme", scheme, "--seed", 5, "--out", key)
            c, s = self.path("c.graph"), self.path("s.map")
            self.ok("auth", "prove", "commit", "--key", key, "--seed", 6, "--commitment", c, "--session", s)
            challenge = self.ok("auth", "verify", "challenge", "--seed", 7).strip()
            self.assertIn(challenge, ("0", "1"))
            responses = {}
            for ch in ("0", "1"):
                responses[ch] = self.path(f"r{ch}.map")
                self.ok("auth", "prove", "respond", "--key", key, "--commitment", c, "--session", s,
                        "--challenge", ch, "--out", responses[ch])
                r = run("auth", "verify", "check", "--key", key, "--commitment", c, "--challenge", ch,
                        "--response", responses[ch])
                self.assertEqual((r.returncode, r.stdout), (0, "accept\n"))
            r = run("auth", "verify", "check", "--key", key, "--commitment", c, "--challenge", "1",
                    "--response", responses["0"])
            self.assertEqual((r.returncode, r.stdout), (1, "reject\n"))
            wrong = self.write("m.map", "map nothing here\n")
            self.assertEqual(run("auth", "verify", "check", "--key", key, "--commitment", c, "--challenge", "0",
                                 "--response", wrong).returncode, 1)
            garbage = self.write("g.map", "mapping\n")
            self.assertEqual(run("auth", "verify", "check", "--key", key, "--commitment", c, "--challenge", "0",
                                 "--response", garbage).returncode, 2)

    def test_run_and_simulate(self):
        key = self.path("key")
        self.ok("auth", "keygen", "--scheme", "sub", "--seed", 1, "--out", key)
        r = run("auth", "run", "--key", key, "--rounds", 4, "--seed", 2)
        self.assertEqual(r.returncode, 0)
        lines = r.stdout.splitlines()
        self.assertEqual(len(lines), 5)
        self.assertTrue(all(l.startswith(f"round {i + 1} challenge ") and l.endswith(" verdict accept")
                            for i, l in enumerate(lines[:4])))
        self.assertEqual(lines[-1], "accept true")
        self.assertEqual(run("auth", "run", "--key", key, "--rounds", 30, "--seed", 2,
                             "--strategy", "cheat-guess-1").returncode, 1)
        r = run("auth", "simulate", "--key", key, "--strategy", "cheat-random", "--rounds", 1,
                "--trials", 10000, "--seed", 4)
        self.assertEqual(r.returncode, 0)
        rate = float(dict(l.split(" ", 1) for l in r.stdout.splitlines())["rate"])
        self.assertAlmostEqual(rate, 0.5, delta=0.02)

    def test_key_files_are_byte_deterministic(self):
        a, b = self.path("a"), self.path("b")
        for out in (a, b):
            self.ok("auth", "keygen", "--scheme", "hom", "--seed", 11, "--out", out)
        for part in ("public/scheme", "public/source.graph", "public/target.graph", "private/secret.map"):
            self.assertTrue(filecmp.cmp(os.path.join(a, part), os.path.join(b, part), shallow=False), part)


class Usage(CliCase):
    def test_missing_seed_on_every_randomized_command(self):
        g = self.write("g.graph", "vertices a b\nedge a b\n")
        key = self.path("key")
        self.ok("auth", "keygen", "--scheme", "hom", "--seed", 1, "--out", key)
        commands = [
            ["graph", "gen", "--vertices", 4],
            ["word", "sample", "--graph", g, "--length", 8],
            ["deal-nn", "--secret", "101", "-n", 2, "--out", self.path("o")],
            ["deal-tn", "--secret", 1, "-p", 7, "-t", 2, "-n", 3, "--out", self.path("o")],
            ["auth", "keygen", "--scheme", "sub", "--out", self.path("k")],
            ["auth", "prove", "commit", "--key", key, "--commitment", self.path("c"), "--session", self.path("s")],
            ["auth", "verify", "challenge"],
            ["auth", "run", "--key", key],
            ["auth", "simulate", "--key", key, "--trials", 10],
            ["bench", "word", "--graph", g, "--lengths", "100,200,400"],
        ]
        for cmd in commands:
            r = run(*cmd)
            self.assertEqual(r.returncode, 2, msg=cmd)
            self.assertIn("--seed", r.stderr + r.stdout)

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)
        self.assertEqual(run("auth", "keygen", "--scheme", "gi", "--seed", 1, "--out", self.path("k")).returncode, 2)

    def test_bench(self):
        g = self.write("g.graph", "vertices a b c\nedge a b\n")
        r = run("bench", "word", "--graph", g, "--lengths", "200,400,800", "--repetitions", 2, "--seed", 1)
        self.assertEqual(r.returncode, 0)
        lines = r.stdout.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[-1].startswith("slope "))
        self.assertEqual(run("bench", "word", "--graph", g, "--lengths", "200", "--seed", 1).returncode, 2)
        self.assertEqual(run("bench", "word", "--graph", g, "--lengths", "200,400,800",
                             "--repetitions", 0, "--seed", 1).returncode, 2)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit("usage: test_cli.py /path/to/raag [unittest args]")
    RAAG = os.path.abspath(sys.argv.pop(1))
    unittest.main()
