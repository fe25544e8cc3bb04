"""Corpus evaluation demo: coverage table plus gold-axiom containment.

Run:  python3 demos/coverage.py
"""

from tedei.corpus import (
    bundled_corpus,
    bundled_gold,
    gold_compare,
    render_gold,
    render_report,
    run_corpus,
)

report = run_corpus(bundled_corpus())
print(render_report(report))
print()
print(render_gold(gold_compare(report, bundled_gold())))
