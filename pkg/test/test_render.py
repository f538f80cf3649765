import unittest
from get_package import package

dsl = package.dsl


class Test(unittest.TestCase):
    def test_corpus_round_trip(self):
        for name in package.corpus.CORPUS_FILES:
            source = dsl.parse(package.corpus.read_corpus_file(name))
            text = dsl.render(source)
            again = dsl.parse(text)
            self.assertEqual(again, source)
            self.assertEqual(dsl.render(again), text)

    def test_canonical_order_and_fractions(self):
        text = '''scm m {
            label L uses {A} = not (A > 0)
            mixture X = tuple(A)
            var A = U
            exo U ~ bernoulli(0.25)
        }'''
        rendered = dsl.render(dsl.parse(text))
        lines = [line.strip() for line in rendered.splitlines()]
        self.assertEqual(lines, ['scm m {',
                                 'exo U ~ bernoulli(1/4)',
                                 'var A = U',
                                 'mixture X = tuple(A)',
                                 'label L uses {A} = not (A > 0)',
                                 '}'])

    def test_query_render(self):
        text = '''scm m {
            exo U ~ bernoulli(1/2)
            var A = U
            var B = A xor U
            mixture X = tuple(A, B)
            label L uses {A, B} = A - B = 0
        }
        query q on m = P(L = 1 | do(A = 0, B = 1) ; given B = 0)
        query r on m = P(L = 0 | do(B = 1))
        '''
        source = dsl.parse(text)
        rendered = dsl.render(source)
        self.assertIn('query q on m = P(L = 1 | do(A = 0, B = 1) ; given B = 0)', rendered)
        self.assertIn('query r on m = P(L = 0 | do(B = 1))', rendered)
        self.assertEqual(dsl.parse(rendered), source)

    def test_nested_parentheses(self):
        A, B, C = dsl.Ref('A'), dsl.Ref('B'), dsl.Ref('C')
        expr = dsl.BinOp('-', A, dsl.BinOp('-', B, C))
        self.assertEqual(expr.render(), 'A - (B - C)')
        self.assertEqual(expr.evaluate({'A': 5, 'B': 3, 'C': 1}), 3)
        self.assertEqual(dsl.fold('xor', [A, B, C]).render(), '(A xor B) xor C')
