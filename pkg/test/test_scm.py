import unittest
import itertools
from fractions import Fraction
from get_package import package

F = Fraction
model = package.model


def corpus_models():
    return model.load_scms(package.corpus.load_corpus())


class Test(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.scms = corpus_models()

    def test_enumerate_u_faces(self):
        scm = self.scms['faces_bp']
        states = list(model.enumerate_u(scm))
        self.assertEqual(len(states), 16)
        self.assertEqual(sum(p for _, p in states), 1)
        probs = {tuple(sorted(u.items())): p for u, p in states}
        key = (('U_C1', 1), ('U_C2', 1), ('U_F', 1), ('U_S', 1))
        self.assertEqual(probs[key], F(27, 625))

    def test_enumerate_u_degenerate(self):
        source = package.parse('''scm m {
            exo U ~ bernoulli(1)
            var A = U
            mixture X = tuple(A)
            label L uses {A} = A
        }''')
        scm = model.load_scms(source)['m']
        self.assertEqual(list(scm.enumerate_u()), [({'U': 1}, F(1))])
        self.assertEqual(model.observational_joint(scm, ['A']).rows(), [((1,), F(1))])

    def test_enumerate_u_barmnist(self):
        states = list(self.scms['barmnist'].enumerate_u())
        self.assertEqual(len(states), 64)
        self.assertEqual(sum(p for _, p in states), 1)

    def test_partitioned_enumeration(self):
        scm = self.scms['barmnist']
        full = list(scm.enumerate_u())
        for n in (1, 3, 7, 100):
            parts = [list(scm.enumerate_u(part=(i, n))) for i in range(n)]
            self.assertEqual(list(itertools.chain(*parts)), full)

    def test_evaluate(self):
        scm = self.scms['faces_bp']
        env = model.evaluate(scm, {'U_F': 0, 'U_S': 1, 'U_C1': 0, 'U_C2': 1})
        self.assertEqual((env['F'], env['S'], env['C']), (1, 1, 1))
        self.assertEqual(env['X'], (1, 1, 1, 1))
        self.assertEqual(env['Yhat'], 1)
        env = model.evaluate(self.scms['barmnist'], {'U_D': 1, 'U_C': 0, 'U_B1': 1, 'U_B2': 0, 'U_B3': 0, 'U_Y': 0})
        self.assertEqual((env['D'], env['B']), (1, 1))

    def test_evaluate_is_deterministic(self):
        scm = self.scms['fig2_alt']
        for u, _ in scm.enumerate_u():
            self.assertEqual(scm.evaluate(u), scm.evaluate(u))

    def test_intervene(self):
        scm = self.scms['faces_cp']
        sub = model.intervene(scm, {'S': 0})
        for u, _ in scm.enumerate_u():
            env = sub.evaluate(u)
            self.assertEqual(env['S'], 0)
            self.assertEqual(env['C'], u['U_C1'])
        empty = scm.intervene({})
        for u, _ in scm.enumerate_u():
            self.assertEqual(empty.evaluate(u), scm.evaluate(u))

    def test_intervene_barmnist(self):
        sub = self.scms['barmnist'].intervene({'D': 0})
        p = sum(prob for u, prob, env in sub.worlds() if env['B'] == 1)
        self.assertEqual(p, F(1, 18))

    def test_intervention_errors(self):
        scm = self.scms['barmnist']
        for w in ({'X': 0}, {'Yhat': 1}, {'U_D': 0}, {'Y': 1}, {'nope': 0}):
            with self.assertRaises(model.InterventionError):
                scm.intervene(w)

    def test_consistency(self):
        # intervening on the value a world already has changes nothing in that world
        scm = self.scms['barmnist']
        for u, _ in scm.enumerate_u():
            env = scm.evaluate(u)
            w = {'D': env['D'], 'C': env['C']}
            self.assertEqual(scm.intervene(w).evaluate(u), env)

    def test_introspection(self):
        scm = self.scms['barmnist']
        self.assertEqual(sorted(scm.features), ['B', 'C', 'D'])
        self.assertEqual(scm.outcomes, ['Y'])
        self.assertEqual(scm.observables[-1], 'Yhat')
        self.assertEqual(scm.domain('U_B2'), [0, 1])
        self.assertEqual(scm.domain('Y'), [0, 1])
        bp = self.scms['faces_bp']
        self.assertEqual(bp.observables, ['F', 'S', 'C', 'U_S', 'Yhat'])
        with self.assertRaises(model.UnknownVariableError):
            scm.domain('nope')

    def test_evaluation_order(self):
        source = package.parse('''scm m {
            exo U ~ bernoulli(1/2)
            var B = A xor U
            var A = U
            mixture X = tuple(A, B)
            label L uses {A, B} = A and B
        }''')
        scm = model.load_scms(source)['m']
        self.assertEqual(scm.endogenous_names, ['A', 'B'])
        joint = model.observational_joint(scm, ['A', 'B'])
        self.assertEqual(joint.rows(), [((0, 0), F(1, 2)), ((1, 0), F(1, 2))])

    def test_with_classifier(self):
        scm = self.scms['barmnist']
        refit = scm.with_classifier(['D'], target='Y')
        self.assertEqual(refit.classifier.features, ('D',))
        self.assertEqual(refit.fitted_classifier().table, {(0,): 0, (1,): 1})
        expr = package.dsl.Ref('C')
        other = scm.with_classifier(['C'], expr=expr)
        for u, _, env in other.worlds():
            self.assertEqual(env['Yhat'], env['C'])
        with self.assertRaises(model.UnknownVariableError):
            scm.with_classifier(['Y'], target='Y')

    def test_cache(self):
        scm = corpus_models()['fig2']
        first = scm.worlds()
        self.assertIs(scm.worlds(), first)
        scm.clear_cache()
        self.assertIsNot(scm.worlds(), first)
        scm.set_cache_state(False)
        self.assertIsNot(scm.worlds(), scm.worlds())
