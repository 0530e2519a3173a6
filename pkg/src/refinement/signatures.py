import logging

from models.partition import ClassSignature, OrderedPartition, RefinementTrace
from refinement.exception import SignatureCollisionException

log = logging.getLogger('c2kit')


def class_signatures(trace: RefinementTrace) -> list[ClassSignature]:
    """Signature of every stable cell, in the order the refiner left the cells"""
    signatures = [ClassSignature(trace.rounds[i], trace.colors[i], len(cell), trace.profiles[i])
                  for i, cell in enumerate(trace.cells)]
    if len(set(signatures)) != len(signatures):
        seen = {}
        for i, signature in enumerate(signatures):
            if signature in seen:
                raise SignatureCollisionException(f'cells {seen[signature]} and {i} share signature {signature}')
            seen[signature] = i
    return signatures


def ordered_partition(trace: RefinementTrace) -> OrderedPartition:
    """Sorts the stable cells by signature"""
    signatures = class_signatures(trace)
    order = sorted(range(len(signatures)), key=signatures.__getitem__)
    return OrderedPartition([trace.cells[i] for i in order],
                            [signatures[i] for i in order],
                            [trace.colors[i] for i in order],
                            trace)
