from .statistics import CorrelationResult, pearson
from .analysis import (CorpusSummary, KindSummary, analyze_corpus, analyze_project,
                       find_candidates, render_summary, summarize, summary_to_dict)
from .join import (CORRELATED_PAIRS, JoinedRow, correlate, join_results, read_results,
                   render_correlations)
