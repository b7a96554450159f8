"""
Django command to enumerate expansion graphs and compute chromatic data
"""

from core.exceptions import InputError
from core.io import read_json
from core.management.base import ComputationCommand, Output
from graphs.bipartite import (
    automorphism_count,
    black_graph,
    chromatic_weight,
    coverings,
    cycle_rank,
    enumerate_chromatic_graphs,
    feynman_weight,
)
from graphs.chromatic import chromatic_polynomial, mu_graph
from graphs.structures import SimpleGraph, TaggedBipartiteGraph


def _bipartite_summary(h):
    summary = {
        'graph': h.to_json(),
        'edges': len(h.edges),
        'loops': cycle_rank(h),
        'automorphisms': automorphism_count(h),
    }
    if h.chromatic_class:
        summary['mobius_black'] = mu_graph(black_graph(h))
        summary['weight'] = chromatic_weight(h)
    else:
        summary['weight'] = feynman_weight(h)
    return summary


class Command(ComputationCommand):
    """ graphs enumerate|chromatic """
    help = 'Enumerate chromatic-class graphs or analyse a graph file'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['enumerate', 'chromatic'])
        parser.add_argument('--sites', type=int, default=2)
        parser.add_argument(
            '--max-edges', dest='max_edges', type=int, default=4
        )
        parser.add_argument('--graph', help='Graph JSON file')
        parser.add_argument(
            '--coverings', action='store_true',
            help='Also list the coverings of a chromatic-class graph',
        )

    def compute(self, config, **options):
        if options['action'] == 'enumerate':
            graphs = enumerate_chromatic_graphs(
                options['sites'], options['max_edges']
            )
            summaries = [_bipartite_summary(h) for h in graphs]
            return Output(
                {
                    'sites': options['sites'],
                    'max_edges': options['max_edges'],
                    'count': len(graphs),
                    'graphs': summaries,
                },
                header=('tag_sets', 'edges', 'loops', 'weight'),
                rows=[
                    (
                        '"' + ' '.join(
                            '{' + ','.join(map(str, s)) + '}'
                            for s in h.black_tag_sets()
                        ) + '"',
                        s['edges'], s['loops'], s['weight'],
                    )
                    for h, s in zip(graphs, summaries)
                ],
            )

        if not options['graph']:
            raise InputError('chromatic needs --graph')
        data = read_json(options['graph'])
        if not isinstance(data, dict):
            raise InputError(f'{options["graph"]}: expected a JSON object')
        if 'blacks' in data:
            h = TaggedBipartiteGraph.from_json(data)
            summary = _bipartite_summary(h)
            if options['coverings']:
                summary['coverings'] = [
                    _bipartite_summary(cover) for cover in coverings(h)
                ]
            return Output(summary)

        graph = SimpleGraph.from_json(data)
        polynomial = chromatic_polynomial(graph)
        connected = graph.is_connected()
        return Output(
            {
                'graph': graph.to_json(),
                'coefficients': list(polynomial.coefficients),
                'polynomial': str(polynomial),
                'mobius': polynomial.coefficient(1) if connected else None,
            },
            header=('degree', 'coefficient'),
            rows=list(enumerate(polynomial.coefficients)),
        )
