from wordpack.metrics.bit_cost import BitCost, estimate, reduction_percent
from wordpack.metrics.corpus_bench import (
    BenchResult,
    corpus_bench,
    list_corpus,
    render_records,
    render_table,
)
from wordpack.metrics.report import (
    ReductionReport,
    format_percent,
    report_for_payload,
    report_for_text,
    report_from_counts,
    report_table4,
)
