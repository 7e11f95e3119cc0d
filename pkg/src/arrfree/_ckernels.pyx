# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled version of the sparse ``p -= c * shifted(terms)`` update.

Same contract as :func:`arrfree._pykernels.axpy`.  Keys stay Python ints and
coefficients stay exact scalars; the gain comes from removing interpreter
overhead in the loop and the dict protocol.
"""

from cpython.dict cimport PyDict_DelItem, PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject
from heapq import heappush


def axpy(dict p, terms, shift, c, list heap):
    cdef list items = terms if type(terms) is list else list(terms)
    cdef Py_ssize_t i, n = len(items)
    cdef PyObject *cur
    cdef object k, v, cg
    cdef tuple pair
    cdef bint track = heap is not None
    for i in range(n):
        pair = <tuple>items[i]
        k = pair[0] + shift
        cg = pair[1]
        cur = PyDict_GetItem(p, k)
        if cur == NULL:
            v = -(c * cg)
            if v:
                PyDict_SetItem(p, k, v)
                if track:
                    heappush(heap, -k)
        else:
            v = <object>cur - c * cg
            if v:
                PyDict_SetItem(p, k, v)
            else:
                PyDict_DelItem(p, k)
