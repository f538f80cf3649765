import io
import unittest
from get_package import package

suite = package.suite


class Test(unittest.TestCase):
    def test_golden_suite_passes(self):
        buffer = io.StringIO()
        golden = suite.GoldenSuite(seed=0, n_graphs=20, n_scms=3, file=buffer)
        self.assertTrue(golden.run(), buffer.getvalue())
        lines = buffer.getvalue().splitlines()
        self.assertEqual(len(lines), len(golden.checks()) + 1)
        self.assertTrue(all(line.startswith('PASS') for line in lines[:-1]))
        self.assertEqual(lines[-1], '%d/%d checks passed' % (len(golden.checks()), len(golden.checks())))

    def test_quiet(self):
        buffer = io.StringIO()
        golden = suite.GoldenSuite(n_graphs=5, n_scms=1, file=buffer, verbose=False)
        golden.run()
        self.assertEqual(buffer.getvalue(), '')
        self.assertEqual(len(golden.verdicts), len(golden.checks()))

    def test_failing_check_is_reported(self):
        golden = suite.GoldenSuite(n_graphs=1, n_scms=1, verbose=False)
        golden.checks = lambda: [('Thm. 9', 'always fails', lambda: (False, 'detail')), ('Ex. 9', 'raises', lambda: 1 / 0)]
        self.assertFalse(golden.run())
        self.assertEqual(golden.verdicts[0].line(), 'FAIL  [Thm. 9] always fails: detail')
        self.assertIn('ZeroDivisionError', golden.verdicts[1].detail)

    def test_every_verdict_is_cited(self):
        buffer = io.StringIO()
        golden = suite.GoldenSuite(n_graphs=5, n_scms=1, file=buffer)
        golden.run()
        cites = [cite for cite, _, _ in golden.checks()]
        self.assertTrue(all(cites))
        for cite in ('Ex. 3', 'Ex. 4', 'Appendix Ex. 7', 'Appendix probability table', '§3.1', '§3.2', 'Fig. 8b', 'Thm. 4'):
            self.assertIn(cite, cites)
        for line, cite in zip(buffer.getvalue().splitlines(), cites):
            self.assertTrue(line.startswith('PASS  [%s] ' % cite), line)

    def test_defaults(self):
        golden = suite.GoldenSuite(verbose=False)
        self.assertEqual((golden.seed, golden.n_graphs), (0, 1000))
