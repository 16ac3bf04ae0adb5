"""A small complete DPLL solver with deterministic model enumeration.

Clauses are tuples of nonzero ints (DIMACS-style literals). Branching
takes the lowest-numbered variable that still occurs in an unsatisfied
clause and tries ``True`` first. Variables left unconstrained once every
clause is satisfied are completed ``False``-first, so the first model of
an empty formula is all-false.
"""


def _propagate(clauses, assign):
    """Unit propagation in place. Returns False on conflict."""
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            unassigned = None
            n_unassigned = 0
            satisfied = False
            for lit in clause:
                val = assign[abs(lit)]
                if val is None:
                    if lit != unassigned:
                        n_unassigned += 1
                        unassigned = lit
                elif val == (lit > 0):
                    satisfied = True
                    break
            if satisfied:
                continue
            if n_unassigned == 0:
                return False
            if n_unassigned == 1:
                assign[abs(unassigned)] = unassigned > 0
                changed = True
    return True


def _branch_var(clauses, assign):
    best = None
    for clause in clauses:
        if any(assign[abs(lit)] == (lit > 0) for lit in clause):
            continue
        for lit in clause:
            v = abs(lit)
            if assign[v] is None and (best is None or v < best):
                best = v
    return best


def _completions(assign, free):
    if not free:
        yield tuple(int(assign[v]) for v in range(1, len(assign)))
        return
    v, rest = free[0], free[1:]
    for val in (False, True):
        assign[v] = val
        yield from _completions(assign, rest)
    assign[v] = None


def iter_models(clauses, num_vars):
    """Yield every model as a tuple of 0/1 values for variables 1..num_vars."""
    clauses = [tuple(c) for c in clauses]
    for c in clauses:
        for lit in c:
            if lit == 0 or abs(lit) > num_vars:
                raise ValueError(f"literal {lit} out of range for {num_vars} variables")
    stack = [[None] * (num_vars + 1)]
    # explicit stack so deep formulas do not hit the recursion limit
    while stack:
        assign = stack.pop()
        if not _propagate(clauses, assign):
            continue
        v = _branch_var(clauses, assign)
        if v is None:
            free = [u for u in range(1, num_vars + 1) if assign[u] is None]
            yield from _completions(assign, free)
            continue
        lo, hi = assign[:], assign
        lo[v] = False
        hi[v] = True
        stack.append(lo)
        stack.append(hi)


def solve(clauses, num_vars):
    """First model in enumeration order, or None if unsatisfiable."""
    return next(iter_models(clauses, num_vars), None)


def evaluate(clauses, model):
    """Truth value of a CNF under a 0/1 model (index 0 is variable 1)."""
    return all(any((model[abs(l) - 1] == 1) == (l > 0) for l in c) for c in clauses)
