import os
import unittest
from click.testing import CliRunner
from get_package import package

main = package.cli.main

COPY = '''scm copy {
    exo U ~ bernoulli(1/2)
    var A = U
    var B = A
    mixture X = tuple(A, B)
    label L uses {A} = A
}
'''


class Test(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(main, list(args))

    def test_check(self):
        result = self.invoke('check', 'barmnist', '--t', 'B,D,C', '--w', 'D')
        self.assertEqual(result.exit_code, 1)
        self.assertIn('inadmissible', result.output)
        self.assertIn('{B}', result.output)
        result = self.invoke('check', 'barmnist', '--t', 'C,D', '--w', 'D')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('ok', result.output)
        result = self.invoke('check', 'faces_bp', '--t', 'X', '--w', 'S')
        self.assertEqual(result.exit_code, 1)
        self.assertIn('blackbox', result.output)

    def test_documented_examples(self):
        result = self.invoke('check', 'barmnist', '--t', 'D', '--w', 'D')
        self.assertEqual(result.exit_code, 0)
        result = self.invoke('check', 'fig2', '--t', 'S,F', '--w', 'S')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('ok', result.output)
        result = self.invoke('maxt', 'fig2', '--w', 'S')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('{F, S}', result.output)

    def test_help_lists_commands(self):
        result = self.invoke('--help')
        self.assertEqual(result.exit_code, 0)
        for command in ('check', 'maxt', 'tad', 'wad', 'eval', 'equiv', 'tradeoff', 'diagram', 'paper-suite'):
            self.assertIn(command, result.output)
        self.assertIn('Largest feature set admissible', self.invoke('maxt', '--help').output)

    def test_unresolved_input(self):
        self.assertEqual(self.invoke('check', 'nope', '--t', 'D', '--w', 'D').exit_code, 2)
        self.assertEqual(self.invoke('check', 'barmnist', '--t', 'Q', '--w', 'D').exit_code, 2)
        self.assertEqual(self.invoke('eval', 'nope').exit_code, 2)
        self.assertEqual(self.invoke('equiv', 'fig2', 'barmnist').exit_code, 2)
        self.assertNotEqual(self.invoke('--cap', '0', 'tad', 'fig2', '--w', 'S').exit_code, 0)

    def test_maxt(self):
        result = self.invoke('maxt', 'barmnist', '--w', 'D')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('{C, D}', result.output)
        self.assertIn('accuracy', result.output)

    def test_families(self):
        result = self.invoke('tad', 'fig2', '--w', 'S')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('{F, S}', result.output)
        self.assertNotIn('{C}', result.output)
        result = self.invoke('wad', 'fig2', '--t', 'F,S,C')
        self.assertIn('{C, S}', result.output)
        self.assertNotIn('{F, S}\n', result.output)
        result = self.invoke('--cap', '2', 'tad', 'fig2', '--w', 'C')
        self.assertIn('truncated', result.output)

    def test_eval(self):
        result = self.invoke('eval', 'q_digit')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('1/154', result.output)
        self.assertIn('closed_form', result.output)
        result = self.invoke('eval', 'q_digit', '--t', 'C,D', '--method', 'closed')
        self.assertEqual(result.exit_code, 0)
        self.assertNotIn('oracle', result.output)
        self.assertIn('yes', result.output)

    def test_equiv(self):
        result = self.invoke('equiv', 'faces_bp', 'faces_bp_alt', '--query', 'q_smile_bp')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('difference', result.output)
        self.assertEqual(self.invoke('equiv', 'fig2', 'faces_cp').exit_code, 1)

    def test_csv_format(self):
        result = self.invoke('--format', 'csv', 'equiv', 'faces_cp', 'faces_cp_alt', '--query', 'q_smile_cp')
        lines = result.output.splitlines()
        self.assertEqual(lines[0], 'key,value,value_decimal')
        self.assertIn('difference,1/5,0.2', lines)

    def test_tradeoff(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('tradeoff', 'barmnist', '--query', 'q_digit', '--arch', 'B,D,C', '--arch', 'D',
                                 '--csv', 'tradeoff.csv')
            self.assertEqual(result.exit_code, 0)
            self.assertIn('mean:q_digit', result.output)
            with open('tradeoff.csv') as f:
                lines = f.read().splitlines()
            self.assertTrue(lines[0].startswith('arch,query,accuracy,admissible,estimate,oracle,abs_error'))
            self.assertEqual(len(lines), 5)

    def test_diagram_and_files(self):
        result = self.invoke('diagram', 'fig2')
        self.assertIn('S -> C', result.output.splitlines())
        with self.runner.isolated_filesystem():
            with open('copy.scm', 'w') as f:
                f.write(COPY)
            result = self.invoke('--out', 'diagram.txt', 'diagram', 'copy', '-f', 'copy.scm')
            self.assertEqual(result.exit_code, 0)
            self.assertTrue(os.path.exists('diagram.txt'))
            with open('diagram.txt') as f:
                self.assertIn('A -> B', f.read().splitlines())
            with open('broken.scm', 'w') as f:
                f.write('scm broken {\n    var = \n}\n')
            self.assertEqual(self.invoke('diagram', 'broken', '-f', 'broken.scm').exit_code, 2)

    def test_suite_command(self):
        result = self.invoke('--seed', '3', 'paper-suite', '--graphs', '5', '--models', '2')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('checks passed', result.output)
        self.assertNotIn('FAIL', result.output)
