"""
Flower models: nets whose language is every sequence over an alphabet
"""

from typing import Iterable

from petri.nets import AcceptingPetriNet, build_net


def _alphabet(alphabet: Iterable[str]):
    activities = sorted(set(alphabet))
    if not activities:
        raise ValueError('A flower model needs at least one activity')
    return activities


def flower_model(alphabet: Iterable[str]) -> AcceptingPetriNet:
    """One marked place, initial and final, with a self-loop per activity"""
    activities = _alphabet(alphabet)
    transitions = {f't{i}': a for i, a in enumerate(activities)}
    arcs = [(p, q) for t in transitions for p, q in (('hub', t), (t, 'hub'))]
    return build_net({'hub': 1}, transitions, arcs, [{'hub': 1}],
                     name='flower{' + ','.join(activities) + '}')


def wf_flower_model(alphabet: Iterable[str]) -> AcceptingPetriNet:
    """Flower wrapped in τ entry and exit transitions so that it is WF-shaped"""
    activities = _alphabet(alphabet)
    transitions = {f't{i}': a for i, a in enumerate(activities)}
    arcs = [(p, q) for t in transitions for p, q in (('hub', t), (t, 'hub'))]
    transitions.update(tau_in=None, tau_out=None)
    arcs += [('source', 'tau_in'), ('tau_in', 'hub'), ('hub', 'tau_out'), ('tau_out', 'sink')]
    return build_net({'source': 1, 'hub': 0, 'sink': 0}, transitions, arcs, [{'sink': 1}],
                     name='wf-flower{' + ','.join(activities) + '}')
