"""Pure-Python versions of the hot loops (reference implementation)."""

from heapq import heappush


def axpy(p, terms, shift, c, heap):
    """``p -= c * (terms shifted by shift)`` in place.

    New keys are pushed (negated) onto ``heap`` when one is given, so a
    max-heap of live keys can be kept alongside ``p``.
    """
    get = p.get
    for t, cg in terms:
        k = t + shift
        v = get(k)
        if v is None:
            v = -(c * cg)
            if v:
                p[k] = v
                if heap is not None:
                    heappush(heap, -k)
        else:
            v = v - c * cg
            if v:
                p[k] = v
            else:
                del p[k]
