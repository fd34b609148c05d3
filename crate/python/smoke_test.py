#!/usr/bin/env python3
"""Smoke test for the pycatlaw extension module.

Builds nothing itself: it looks for the compiled cdylib under target/
(release preferred), makes it importable under the proper module name,
and drives the main types and operations end to end.

    cargo build -p pycatlaw            # or --release
    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def import_pycatlaw():
    candidates = [
        ROOT / "target" / "release" / "libpycatlaw.so",
        ROOT / "target" / "debug" / "libpycatlaw.so",
        ROOT / "target" / "release" / "libpycatlaw.dylib",
        ROOT / "target" / "debug" / "libpycatlaw.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p pycatlaw")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="pycatlaw-"))
    shutil.copy2(built, stage / "pycatlaw.so")
    sys.path.insert(0, str(stage))
    import pycatlaw

    return pycatlaw


def main():
    m = import_pycatlaw()

    # categories
    chain = m.Category.chain(3)
    assert chain.objects() == 3 and chain.morphisms() == 6
    assert chain.validate() == []
    assert chain.is_thin()
    z2 = m.Category.z2()
    assert z2.validate() == []
    assert not z2.is_thin() or z2.morphisms() == 2  # one object, two endos
    assert z2.compose(1, 1) == 0  # s∘s = e

    # enumeration oracles
    assert m.count_endofunctors(chain) == 10
    assert m.count_endofunctors(z2) == 2
    assert m.count_monads(chain) == 4
    assert m.count_monads(z2) == 2

    # functors and transformations
    t = m.Functor.tables(chain, chain, [1, 1, 2])
    assert t.validate() == []
    assert t.power(2) == t  # closure operators are idempotent
    ident = m.Functor.identity(chain)
    eta = m.NatTrans.forced(ident, t)
    assert eta.validate() == []
    assert m.count_nat_trans(ident, t) == 1
    assert m.count_nat_trans(t, ident) == 0

    # monads and their Eilenberg-Moore categories
    closure = m.Monad.closure(chain, [1, 1, 2])
    assert closure.validate() == []
    assert closure.em_object_count() == 2
    assert closure.em_algebras() == [(1, 3), (2, 5)]
    assert m.Monad.identity(chain).em_object_count() == 3

    # distributive law over the interior comonad, with its lift
    interior = m.Comonad.interior(chain, [0, 1, 1])
    assert interior.validate() == []
    law = m.DistLaw.synthesize(closure, interior)
    assert law.validate() == []
    assert m.count_laws(closure, interior) == 1
    assert law.lift_objects() == [0, 0]
    laws, lifts, ok = m.beck_roundtrip(closure, interior)
    assert (laws, lifts, ok) == (1, 1, True)

    # the check-document runner
    doc = """
category C3 = poset chain 3
monad T on C3 = closure [1, 1, 2]
comonad W on C3 = interior [0, 1, 1]
distlaw L = T over W
check validate_monad T
check em_count T = 2
check beck_roundtrip T W
check validate_dist_law L
"""
    assert m.check_document(doc) == 0
    report = json.loads(m.run_document(doc))
    assert report["summary"]["total"] == 4
    assert report["summary"]["passed"] == 4
    assert all(c["status"] == "pass" for c in report["checks"])
    assert m.check_document("category C = poset chain 3\ncheck count_functors C = 11\n") == 1
    assert m.check_document("category C = poset chain\n") == 2

    print("pycatlaw smoke test: all assertions passed")


if __name__ == "__main__":
    main()
