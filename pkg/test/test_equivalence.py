import unittest
from fractions import Fraction
import numpy as np
from get_package import package

F = Fraction
inference = package.inference

PAIRS = [('faces_bp', 'faces_bp_alt', 'q_smile_bp', (F(0), F(1), F(1))),
         ('faces_cp', 'faces_cp_alt', 'q_smile_cp', (F(3, 10), F(1, 2), F(1, 5))),
         ('fig2', 'fig2_alt', 'q_smile', (F(0), F(0), F(0)))]


class Test(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        source = package.corpus.load_corpus()
        cls.scms = package.model.load_scms(source)
        cls.queries = inference.load_queries(source)

    def test_pairs_are_equivalent(self):
        for a, b, _, _ in PAIRS:
            self.assertTrue(inference.obs_equivalent(self.scms[a], self.scms[b]), (a, b))
            self.assertTrue(inference.obs_equivalent(self.scms[b], self.scms[a]), (b, a))

    def test_reflexive(self):
        for scm in self.scms.values():
            self.assertTrue(inference.obs_equivalent(scm, scm))

    def test_not_equivalent(self):
        # same features and label, different classifier
        self.assertFalse(inference.obs_equivalent(self.scms['fig2'], self.scms['faces_cp']))
        refit = self.scms['barmnist'].with_classifier('D', target='Y')
        self.assertFalse(inference.obs_equivalent(self.scms['barmnist'], refit))

    def test_signature_mismatch(self):
        with self.assertRaises(inference.SignatureError):
            inference.obs_equivalent(self.scms['fig2'], self.scms['faces_bp'])
        with self.assertRaises(inference.SignatureError):
            inference.obs_equivalent(self.scms['fig2'], self.scms['barmnist'])

    def test_witnesses(self):
        for a, b, query, expected in PAIRS:
            witness = inference.divergence_witness(self.scms[a], self.scms[b], self.queries[query])
            self.assertEqual(witness, expected, query)

    def test_witness_requires_equivalence(self):
        with self.assertRaises(AssertionError):
            inference.divergence_witness(self.scms['fig2'], self.scms['faces_cp'], self.queries['q_smile'])

    def test_observable_joint(self):
        joint = inference.observable_joint(self.scms['faces_bp'])
        self.assertEqual(joint.variables, ('F', 'S', 'C', 'U_S', 'Yhat'))
        self.assertEqual(sum(p for _, p in joint.rows()), 1)

    def test_witness_matches_oracle_everywhere(self):
        for a, b, query, _ in PAIRS:
            ma, mb = self.scms[a], self.scms[b]
            base = self.queries[query]
            features = sorted(ma.features)
            for row, _ in package.model.observational_joint(ma, features).rows():
                for s in (0, 1):
                    q = inference.Query.make(ma.name, ma.label, 1, {'S': s}, zip(features, row))
                    x, y, diff = inference.divergence_witness(ma, mb, q)
                    self.assertEqual((x, y), (inference.oracle(ma, q).value, inference.oracle(mb, q).value))
                    self.assertEqual(diff, abs(x - y))
                    self.assertTrue(0 <= diff <= 1)
            self.assertEqual(base.W, frozenset('S'))

    def test_self_witness_is_zero(self):
        rng = np.random.RandomState(4)
        for k in range(10):
            scm = package.random_models.random_scm(int(rng.randint(2, 5)), rng, name='m%d' % k)
            v = sorted(scm.features)[0]
            for row, _ in package.model.observational_joint(scm, list(scm.components)).rows():
                q = inference.Query.make(scm.name, scm.label, 1, {v: 0}, zip(scm.components, row))
                x, y, diff = inference.divergence_witness(scm, scm, q)
                self.assertEqual(x, y)
                self.assertEqual(diff, 0)
