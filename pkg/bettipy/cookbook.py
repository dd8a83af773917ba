"""Various generic useful functions
"""
from concurrent.futures import ProcessPoolExecutor

import numpy as np

def is_seq(o):
    """Check if the object is a sequence.

    Parameters
    ----------
    o : any object
      The object to check

    Returns
    -------
    is_seq : bool, scalar
      True if *o* is a sequence, False otherwise
    """
    return hasattr(o, '__len__')

def sample_sizes(n):
    """Returns the pair of sample sizes described by *n*.

    Parameters
    ----------
    n : int or sequence of 2 ints
      A common size, or the sizes of the two samples.

    Returns
    -------
    n1, n2 : int

    Examples
    --------
    >>> sample_sizes(20)
    (20, 20)
    >>> sample_sizes((20, 30))
    (20, 30)
    """
    if is_seq(n):
        if len(n) != 2:
            raise ValueError('n must be an int or a pair of ints')
        n1, n2 = int(n[0]), int(n[1])
    else:
        n1 = n2 = int(n)
    if n1 < 1 or n2 < 1:
        raise ValueError('sample sizes must be >= 1')
    return n1, n2

def replication_rng(seed, index):
    """Returns the generator of replication *index* for a run seeded with *seed*.

    The stream depends only on ``seed + index``, which makes a replication
    reproducible on its own, whatever the order replications run in.
    """
    return np.random.default_rng(int(seed) + int(index))

def map_replications(func, items, threads=1):
    """Apply *func* to every item, serially or on a process pool.

    Parameters
    ----------
    func : callable
      A picklable (module level) function of one argument.
    items : iterable
      The arguments, one per replication.
    threads : int or None
      Number of worker processes. 1 (default) runs in the calling process.

    Returns
    -------
    results : list
      ``[func(item) for item in items]``, in item order.
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=int(threads)) as pool:
        return list(pool.map(func, items))
