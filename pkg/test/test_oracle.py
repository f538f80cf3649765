import unittest
from fractions import Fraction
from get_package import package

F = Fraction
inference = package.inference

ANSWERS = {'q_smile_bp': F(0), 'q_smile_bp_alt': F(1), 'q_smile_cp': F(3, 10), 'q_smile_cp_alt': F(1, 2),
           'q_smile': F(0), 'q_smile_alt': F(0)}


class Test(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        source = package.corpus.load_corpus()
        cls.scms = package.model.load_scms(source)
        cls.queries = inference.load_queries(source)

    def answer(self, name):
        q = self.queries[name]
        return inference.oracle(self.scms[q.scm], q)

    def test_faces_answers(self):
        for name, expected in ANSWERS.items():
            result = self.answer(name)
            self.assertEqual(result.value, expected, name)
            self.assertEqual(result.method, 'oracle')

    def test_evidence_mass(self):
        # P(F=0, S=1, C=1) = 0.144
        self.assertEqual(self.answer('q_smile').evidence_mass, F('0.144'))

    def test_barmnist_digit(self):
        self.assertEqual(self.answer('q_digit').value, F(1, 154))

    def test_matches_factual_when_intervention_is_observed(self):
        scm = self.scms['barmnist']
        for d in (0, 1):
            for b in (0, 1):
                q = inference.Query.make('barmnist', 'Yhat', 1, {'D': d}, {'D': d, 'B': b})
                self.assertEqual(inference.oracle(scm, q).value, inference.factual(scm, q))

    def test_outcome_values_sum_to_one(self):
        for name in ('q_digit', 'q_color_off', 'q_color_on'):
            q = self.queries[name]
            scm = self.scms[q.scm]
            total = inference.oracle(scm, q.with_value(0)).value + inference.oracle(scm, q.with_value(1)).value
            self.assertEqual(total, 1)

    def test_no_evidence(self):
        scm = self.scms['fig2']
        q = inference.Query.make('fig2', 'Yhat', 1, {'S': 0})
        # with S fixed to 0 the prediction is F
        self.assertEqual(inference.oracle(scm, q).value, F('0.52'))

    def test_zero_evidence(self):
        scm = self.scms['faces_bp']
        q = inference.Query.make('faces_bp', 'Yhat', 1, {'S': 0}, {'U_S': 1, 'S': 0})
        with self.assertRaises(inference.ZeroEvidenceError):
            inference.oracle(scm, q)

    def test_query_errors(self):
        scm = self.scms['fig2']
        with self.assertRaises(package.model.UnknownVariableError):
            inference.oracle(scm, inference.Query.make('fig2', 'C', 1, {'S': 0}))
        with self.assertRaises(package.model.UnknownVariableError):
            inference.oracle(scm, inference.Query.make('fig2', 'Yhat', 1, {'S': 0}, {'U_F': 1}))
        with self.assertRaises(package.graph.EmptyInterventionError):
            inference.Query.make('fig2', 'Yhat', 1, {})

    def test_render(self):
        q = self.queries['q_smile']
        self.assertEqual(q.render(), 'P(Yhat=1 | do(S=0); C=1, F=0, S=1)')
        self.assertEqual(str(q), 'q_smile')
        self.assertEqual(q.W, frozenset('S'))
