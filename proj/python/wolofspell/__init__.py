# Copyright 2026 The wolofspell Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Wolof spelling detection and correction."""

from importlib import resources as _resources

from ._core import (
    CostModel,
    EmptyLexicon,
    Error,
    IoError,
    Lexicon,
    MalformedInput,
    SpellChecker,
    Unsegmentable,
    clean,
    edit_distance,
    is_wolof_char,
    normalize,
    segment,
    tokenize,
    transliterate,
    validate,
    wld,
)

__all__ = [
    "CostModel",
    "EmptyLexicon",
    "Error",
    "IoError",
    "Lexicon",
    "MalformedInput",
    "SpellChecker",
    "Unsegmentable",
    "clean",
    "edit_distance",
    "is_wolof_char",
    "normalize",
    "sample_lexicon",
    "segment",
    "tokenize",
    "transliterate",
    "validate",
    "wld",
]


def sample_lexicon() -> Lexicon:
    """The small Wolof word list shipped with the package."""
    path = _resources.files(__name__) / "lexicon_sample.txt"
    with _resources.as_file(path) as p:
        return Lexicon.load(str(p))
