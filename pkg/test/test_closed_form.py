import unittest
from fractions import Fraction
import numpy as np
from get_package import package

F = Fraction
inference = package.inference
model = package.model

COPY = '''scm copy {
    exo U ~ bernoulli(1/2)
    var A = U
    var B = A
    mixture X = tuple(A, B)
    label L uses {A, B} = A and B
}
'''


class Test(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        source = package.corpus.load_corpus()
        cls.scms = model.load_scms(source)
        cls.queries = inference.load_queries(source)

    def test_faces(self):
        scm = self.scms['fig2']
        joint = inference.observable_joint(scm)
        diagram = package.graph.induce_diagram(scm)
        result = inference.closed_form(joint, {'S', 'F'}, self.queries['q_smile'], diagram)
        self.assertEqual(result.value, 0)
        self.assertEqual(result.method, 'closed_form')
        self.assertTrue(result.admissible)
        self.assertEqual(result.evidence_mass, F('0.144'))
        self.assertEqual(result.strata_skipped, 3)
        inadmissible = inference.closed_form(joint, {'F', 'S', 'C'}, self.queries['q_smile'], diagram)
        self.assertFalse(inadmissible.admissible)
        self.assertIsNone(inference.closed_form(joint, {'S', 'F'}, self.queries['q_smile']).admissible)

    def test_empty_feature_set(self):
        joint = inference.observable_joint(self.scms['fig2'])
        q = inference.Query.make('fig2', 'Yhat', 1, {'S': 0})
        self.assertEqual(inference.closed_form(joint, [], q).value, F('0.76'))

    def test_admissible_matches_oracle(self):
        scm = self.scms['barmnist']
        base = self.queries['q_digit']
        for T in ('CD', 'D'):
            fitted = scm.with_classifier(T, target='Y')
            joint = inference.observable_joint(fitted)
            for row, _ in model.observational_joint(fitted, list(scm.components)).rows():
                for d in (0, 1):
                    q = inference.Query.make('barmnist', 'Yhat', 1, {'D': d}, zip(scm.components, row))
                    self.assertEqual(inference.closed_form(joint, fitted.classifier.features, q).value,
                                     inference.oracle(fitted, q).value, (T, row, d))

    def test_inadmissible_diverges(self):
        scm = self.scms['barmnist']
        q = self.queries['q_digit']
        estimate = inference.closed_form(inference.observable_joint(scm), scm.classifier.features, q)
        self.assertEqual(estimate.value, 1)
        self.assertEqual(inference.oracle(scm, q).value, F(1, 154))

    def test_barmnist_rev(self):
        scm = self.scms['barmnist_rev']
        q = self.queries['q_bar']
        wide = scm.with_classifier('BC', target='D')
        self.assertEqual(inference.closed_form(inference.observable_joint(wide), 'BC', q).value, 1)
        self.assertEqual(inference.oracle(wide, q).value, F(1, 2))

    def test_positivity(self):
        scm = model.load_scms(package.parse(COPY))['copy']
        joint = inference.observable_joint(scm)
        q = inference.Query.make('copy', 'L', 1, {'A': 0}, {'A': 1, 'B': 1})
        with self.assertRaises(inference.PositivityError):
            inference.closed_form(joint, ['A', 'B'], q)
        # conditioning on A alone never leaves the support
        self.assertEqual(inference.closed_form(joint, ['A'], q).value, 0)

    def test_zero_evidence(self):
        scm = model.load_scms(package.parse(COPY))['copy']
        q = inference.Query.make('copy', 'L', 1, {'A': 0}, {'A': 1, 'B': 0})
        with self.assertRaises(inference.ZeroEvidenceError):
            inference.closed_form(inference.observable_joint(scm), ['A', 'B'], q)

    def test_joint_must_cover_query(self):
        joint = model.observational_joint(self.scms['fig2'], ['F', 'S', 'Yhat'])
        with self.assertRaises(model.UnknownVariableError):
            inference.closed_form(joint, ['F', 'S'], self.queries['q_smile'])

    def test_outcome_values_sum_to_one(self):
        for name in ('q_smile', 'q_smile_alt', 'q_smile_cp', 'q_smile_cp_alt', 'q_digit', 'q_bar'):
            q = self.queries[name]
            scm = self.scms[q.scm]
            joint = inference.observable_joint(scm)
            total = sum(inference.closed_form(joint, scm.classifier.features, q.with_value(y)).value for y in (0, 1))
            self.assertEqual(total, 1, name)
        rng = np.random.RandomState(3)
        for k in range(10):
            scm = package.random_models.random_scm(int(rng.randint(2, 5)), rng, name='m%d' % k)
            joint = inference.observable_joint(scm)
            last = sorted(scm.features)[-1]
            for v in scm.features:
                q = inference.Query.make(scm.name, scm.label, 0, {v: 1}, {last: 0})
                values = [inference.closed_form(joint, scm.features, q.with_value(y)).value for y in (0, 1)]
                self.assertEqual(sum(values), 1, (scm.name, v))
