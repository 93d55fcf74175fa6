"""
Test cases for Petri nets, the net format, exploration and languages
"""

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from corpus.loaders import get_model, list_entries
from corpus.entries import BY_NAME, MODEL
from precision_core.exceptions import (ExplorationOverflowError, FormatParseError, InvalidMarkingError,
                                       InvalidNetError, NotEnabledError, UnboundedNetError,
                                       UndecidedError)

from .dsl import parse_net, serialize_net
from .language import is_trace, language_dfa, markings_after, search_trace
from .nets import LabeledPetriNet, Marking, build_net, enabled, fire
from .statespace import explore

# a self-loop on p that also puts a token into q every time
PUMP = """\
place p init=1
place q
trans t label=a
arc p t
arc t p
arc t q
final p=1
"""

# a τ-transition that keeps adding tokens to q
TAU_PUMP = """\
place p init=1
place q
place done
trans t
trans x label=x
arc p t
arc t p
arc t q
arc p x
arc x done
final done=1
"""

MODEL_NAMES = [n for n in list_entries(include_supplementary=True) if BY_NAME[n].kind == MODEL]


class MarkingTest(SimpleTestCase):
    """Test markings"""

    def test_zero_counts_dropped(self):
        self.assertEqual(Marking.of({'p': 1, 'q': 0}), Marking.of(p=1))

    def test_from_places(self):
        marking = Marking.from_places(['p', 'q', 'p'])
        self.assertEqual(marking.count('p'), 2)
        self.assertEqual(marking.total(), 3)
        self.assertEqual(str(marking), '{p:2, q}')

    def test_negative_count_rejected(self):
        with self.assertRaises(InvalidMarkingError):
            Marking.of(p=-1)


class FiringRuleTest(SimpleTestCase):
    """Test enabling and firing"""

    def setUp(self):
        self.loop = get_model('fig7a_loop')

    def test_enabled_at_initial(self):
        self.assertEqual(enabled(self.loop, self.loop.initial), frozenset({'a', 'b'}))

    def test_nothing_enabled_after_exit(self):
        after = fire(self.loop, self.loop.initial, 'b')
        self.assertEqual(after, Marking.of(p2=1))
        self.assertEqual(enabled(self.loop, after), frozenset())

    def test_empty_marking_enables_source_transitions_only(self):
        net = build_net({'p': 0}, {'gen': 'g', 'use': 'u'}, [('gen', 'p'), ('p', 'use')], [{'p': 1}])
        self.assertEqual(enabled(net, Marking()), frozenset({'gen'}))

    def test_fire_self_loop(self):
        self.assertEqual(fire(self.loop, self.loop.initial, 'a'), self.loop.initial)

    def test_fire_not_enabled(self):
        after = fire(self.loop, self.loop.initial, 'b')
        with self.assertRaises(NotEnabledError):
            fire(self.loop, after, 'a')

    def test_unknown_place(self):
        with self.assertRaises(InvalidMarkingError):
            enabled(self.loop, Marking.of(nowhere=1))


class NetStructureTest(SimpleTestCase):
    """Test net invariants"""

    def test_place_and_transition_disjoint(self):
        with self.assertRaises(InvalidNetError):
            LabeledPetriNet(places={'x'}, transitions={'x'}, arcs=set())

    def test_arc_must_alternate(self):
        with self.assertRaises(InvalidNetError):
            build_net({'p': 1, 'q': 0}, {'t': 'a'}, [('p', 'q')], [{'q': 1}])

    def test_final_required(self):
        with self.assertRaises(InvalidNetError):
            build_net({'p': 1}, {'t': 'a'}, [('p', 't')], [])

    def test_labels(self):
        net = get_model('fig5a_flower').net
        self.assertTrue(net.is_tau('tau_skip'))
        self.assertEqual(net.label('a'), 'a')
        self.assertEqual(net.visible_transitions, ('a', 'b', 'c'))
        self.assertEqual(net.activities, frozenset('abc'))

    def test_wf_shape(self):
        self.assertTrue(get_model('seq_ab').is_wf_shaped())
        self.assertTrue(get_model('fig2_loop_wfnet').is_wf_shaped())
        # the single-place flower has no source place
        self.assertFalse(get_model('fig8_flower').is_wf_shaped())


class NetFormatTest(SimpleTestCase):
    """Test the net text format"""

    def test_round_trip_corpus(self):
        for name in MODEL_NAMES:
            with self.subTest(name=name):
                model = get_model(name)
                self.assertEqual(parse_net(serialize_net(model)), model)

    def test_fig8_structure(self):
        flower = get_model('fig8_flower')
        self.assertEqual(len(flower.net.places), 1)
        self.assertEqual(len(flower.net.transitions), 3)

    def test_comments_and_forward_arcs(self):
        net = parse_net('arc p t  # arc first\nplace p init=1\ntrans t label=a\narc t q\nplace q\nfinal q=1\n')
        self.assertTrue(is_trace(net, ['a']))

    def test_empty_final_line(self):
        net = parse_net('place p init=1\ntrans t\narc p t\nfinal\n')
        self.assertIn(Marking(), net.finals)

    def test_unknown_keyword(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_net('place p init=1\nnode x\n')
        self.assertEqual(ctx.exception.lineno, 2)

    def test_undeclared_arc_endpoint(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_net('place p init=1\ntrans t\narc p u\nfinal p=1\n')
        self.assertEqual(ctx.exception.lineno, 3)

    def test_duplicate_declaration(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_net('place p\nplace p\n')
        self.assertIn('already declared on line 1', str(ctx.exception))

    def test_bad_token_count(self):
        with self.assertRaises(FormatParseError):
            parse_net('place p init=x\n')

    def test_missing_final(self):
        with self.assertRaises(FormatParseError):
            parse_net('place p init=1\n')


class ExplorationTest(SimpleTestCase):
    """Test bounded state-space exploration"""

    def test_unrolled_loop_states(self):
        graph = explore(get_model('fig7b_unrolled'))
        self.assertEqual(len(graph), 4)
        self.assertTrue(graph.bounded)
        self.assertEqual(len(graph.accepting), 1)

    def test_edges_are_firings(self):
        model = get_model('fig6_m2')
        graph = explore(model)
        for source, transition, target in graph.edges:
            self.assertEqual(model.fire(graph.markings[source], transition), graph.markings[target])
        self.assertEqual(graph.markings[graph.initial], model.initial)

    def test_firing_conserves_tokens(self):
        for name in MODEL_NAMES:
            model = get_model(name)
            graph = explore(model)
            for marking in graph.markings:
                for transition in model.enabled(marking):
                    with self.subTest(model=name, marking=str(marking), transition=transition):
                        successor = model.fire(marking, transition)
                        expected = (marking.total() - len(model.net.preset(transition))
                                    + len(model.net.postset(transition)))
                        self.assertEqual(successor.total(), expected)

    def test_unbounded_flagged(self):
        graph = explore(parse_net(PUMP), bound=3)
        self.assertFalse(graph.bounded)
        self.assertEqual(graph.overflow_place, 'q')
        self.assertEqual(len(graph), 4)

    def test_state_cap(self):
        with self.assertRaises(ExplorationOverflowError):
            explore(get_model('fig6_m1'), state_cap=3)

    def test_invalid_limits(self):
        with self.assertRaises(ValueError):
            explore(get_model('seq_ab'), bound=0)

    def test_repeatable(self):
        model = get_model('fig6_m1')
        self.assertEqual(explore(model), explore(model))

    def test_networkx_view(self):
        graph = explore(get_model('fig4_model')).graph()
        self.assertEqual(graph.number_of_nodes(), 3)
        self.assertEqual(graph.number_of_edges(), 4)


class LanguageTest(SimpleTestCase):
    """Test languages and membership"""

    def setUp(self):
        cache.clear()

    def test_fig4_membership(self):
        model = get_model('fig4_model')
        self.assertTrue(is_trace(model, ['a', 'b', 'a', 'c']))
        self.assertTrue(is_trace(model, ['a', 'd']))
        self.assertFalse(is_trace(model, ['a', 'b']))
        self.assertFalse(is_trace(model, []))

    def test_flower_accepts_empty(self):
        self.assertTrue(is_trace(get_model('fig8_flower'), []))
        self.assertTrue(is_trace(get_model('fig5b_flower_tau'), []))

    def test_equal_flower_languages(self):
        first = language_dfa(get_model('fig5a_flower'))
        second = language_dfa(get_model('fig5b_flower_tau'))
        self.assertEqual(first.signature(), second.signature())

    def test_unbounded_language(self):
        with self.assertRaises(UnboundedNetError):
            language_dfa(parse_net(PUMP), bound=3)

    def test_unbounded_membership_falls_back(self):
        pump = parse_net(PUMP)
        self.assertTrue(is_trace(pump, []))
        self.assertFalse(is_trace(pump, ['a']))

    @override_settings(PRECISION_TAU_CAP=4)
    def test_tau_cap_undecided(self):
        with self.assertRaises(UndecidedError):
            search_trace(parse_net(TAU_PUMP), ['y'])

    def test_tau_pump_found(self):
        self.assertTrue(search_trace(parse_net(TAU_PUMP), ['x']))

    def test_search_budget(self):
        with self.assertRaises(UndecidedError):
            search_trace(get_model('fig6_m1'), ['a', 'c', 'd', 'e', 'f'], budget=2)

    def test_markings_after(self):
        model = get_model('fig5c_constrained')
        self.assertEqual(markings_after(model, ['a']), frozenset({Marking.of(p2=1), Marking.of(p3=1)}))
        self.assertEqual(markings_after(model, ['b']), frozenset())

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(name=st.sampled_from(MODEL_NAMES), sigma=st.lists(st.sampled_from('abcdefgxz'), max_size=5))
    def test_dfa_agrees_with_search(self, name, sigma):
        """DFA membership equals firing-sequence search"""
        model = get_model(name)
        self.assertEqual(language_dfa(model).accepts(sigma), search_trace(model, sigma))
