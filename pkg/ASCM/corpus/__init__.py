'''Bundled description files with hand-checked expected values in their comments.'''
import typing as tp
import os
from ..dsl import SourceFile, parse, validate

CORPUS_DIR = os.path.dirname(os.path.abspath(__file__))
CORPUS_FILES = ['faces.scm', 'barmnist.scm']


def corpus_path(name: str) -> str:
    return os.path.join(CORPUS_DIR, name)


def read_corpus_file(name: str) -> str:
    with open(corpus_path(name), 'r', encoding='utf-8') as f:
        return f.read()


def load_corpus(names: tp.Sequence[str] = tuple(CORPUS_FILES)) -> SourceFile:
    source = SourceFile(())
    for name in names:
        source = source + parse(read_corpus_file(name))
    validate(source)
    return source
