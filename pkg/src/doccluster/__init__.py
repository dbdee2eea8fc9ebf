"""Document clustering with K-Medoids over TF / TF-IDF term-document matrices."""

__version__ = "0.1.0"

from .errors import DocClusterError
from .evaluation import ObservationTable, cluster_efficiency, compare_schemes, observation_table
from .kmedoids import (Clustering, InitKind, InitStrategy, assign, cluster, initialize_medoids,
                       manhattan_distance, try_swap)
from .summarizer import Sentence, Summary, split_sentences, summarize_cluster, summarize_document
from .text_pipeline import Document, Stemmer, StopwordList, remove_stopwords, stem, term_frequencies, tokenize
from .vector_space import (TermDocumentMatrix, Vocabulary, WeightingScheme, build_matrix,
                           build_vocabulary, idf, tf_weight)
