# Copyright 2026 The GUTEK Authors.
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

"""Regenerates segmentation_fixture.jsonl from reference tokenizers.

Sentence splits come from an untrained NLTK Punkt model that knows the
bundled abbreviation list; word splits come from the Treebank word tokenizer
applied per sentence; paragraphs from splitting on blank lines. Entries in
OVERRIDES replace the reference output where gutek deliberately differs, and
each carries the reason.

Usage: python3 make_segmentation_fixture.py > segmentation_fixture.jsonl
"""

import json
import pathlib
import re

from nltk.tokenize import TreebankWordTokenizer
from nltk.tokenize.punkt import PunktParameters, PunktSentenceTokenizer

STRINGS = [
    'The food was nice.',
    'Dr. Smith left. He was angry!',
    '',
    '   ',
    'a b',
    'It costs 3.14 dollars. That is cheap.',
    'Mr. and Mrs. Brown arrived at 5 p.m. yesterday.',
    'Is it true? Yes! It is.',
    'She said "hello." Then she left.',
    'He left (finally.) We cheered.',
    'We met e.g. twice. Then never again.',
    'Apples, pears, etc. are fruit. Bananas too.',
    'Prof. Adams teaches at the Univ. of Leeds. Classes start soon.',
    'The U.S. economy grew. Markets rallied.',
    'J. R. R. Tolkien wrote books. They sold well.',
    'A. B. C.',
    'Wait... What happened?',
    'Hmm... maybe later.',
    'No way!!! Really?!',
    'The score was 1,000 to 2. Fans left.',
    'Version 2.0.1 shipped today. Users upgraded.',
    'Visit example.com today. It is free.',
    "It's a dog's life. Don't worry.",
    'A well-known fact. Another fact.',
    'The end',
    'First line\nsecond line. Third sentence here.',
    'Para one.\n\nPara two.',
    'Hello world. ',
    '  Leading spaces. Trailing too.  ',
    'He paid $5.50 for it. Cheap!',
    'Meet me at 10 a.m. tomorrow. Bring coffee.',
    'See Fig. 3 for details. It helps.',
    'Capt. Hook and Lt. Dan met. They talked.',
    'The movie was great (really great). I loved it.',
    '"Stop!" he shouted. Nobody moved.',
    'Ratings: 4.5 stars. Worth it.',
    'What? No. Yes.',
    'Café au lait is nice. Très bien.',
    'He was born in 1990. She in 1991.',
    'The vs. match was close. Team A won.',
    'I.e. this is odd. Next sentence.',
    "Call St. Mary's hospital. Ask for Dr. Who.",
    'This ends with etc. Then it goes on.',
    'One. Two. Three.',
    "Quotes 'single.' Next one.",
    'Numbers like .5 and 0.75 matter. Always.',
    'He said: wow. She said: nice.',
    'The Ph.D. student graduated. Everyone clapped.',
    'Ellipsis at the end...',
    'Mixed?! Punctuation... Works. Fine.',
]

OVERRIDES = {
    ('She said "hello." Then she left.', 'words'): (
        ['She', 'said', '"', 'hello', '.', '"', 'Then', 'she', 'left', '.'],
        'quotes keep their original characters'),
    ('A. B. C.', 'sentences'): (
        ['A.', 'B.', 'C.'],
        'an initial not followed by a capitalized word ends a sentence'),
    ('A. B. C.', 'words'): (
        ['A.', 'B.', 'C.'],
        'single capitals keep their period'),
    ('Wait... What happened?', 'sentences'): (
        ['Wait...', 'What happened?'],
        'an ellipsis before an uppercase token ends a sentence'),
    ('No way!!! Really?!', 'sentences'): (
        ['No way!!!', 'Really?!'],
        'a run of terminators is one token'),
    ('No way!!! Really?!', 'words'): (
        ['No', 'way', '!!!', 'Really', '?!'],
        'a run of terminators is one token'),
    ("It's a dog's life. Don't worry.", 'words'): (
        ["It's", 'a', "dog's", 'life', '.', "Don't", 'worry', '.'],
        'contractions stay whole'),
    ('  Leading spaces. Trailing too.  ', 'sentences'): (
        ['Leading spaces.', 'Trailing too.'],
        'segments never include surrounding whitespace'),
    ('"Stop!" he shouted. Nobody moved.', 'words'): (
        ['"', 'Stop', '!', '"', 'he', 'shouted', '.', 'Nobody', 'moved', '.'],
        'quotes keep their original characters'),
    ("Call St. Mary's hospital. Ask for Dr. Who.", 'words'): (
        ['Call', 'St.', "Mary's", 'hospital', '.', 'Ask', 'for', 'Dr.', 'Who', '.'],
        'contractions stay whole'),
    ("Quotes 'single.' Next one.", 'words'): (
        ['Quotes', "'", 'single', '.', "'", 'Next', 'one', '.'],
        'an opening single quote is its own token'),
    ('Mixed?! Punctuation... Works. Fine.', 'sentences'): (
        ['Mixed?!', 'Punctuation...', 'Works.', 'Fine.'],
        'an ellipsis before an uppercase token ends a sentence'),
    ('Mixed?! Punctuation... Works. Fine.', 'words'): (
        ['Mixed', '?!', 'Punctuation', '...', 'Works', '.', 'Fine', '.'],
        'a run of terminators is one token'),
}


def abbreviations():
  path = pathlib.Path(__file__).resolve().parents[2] / 'core' / 'data' / 'abbreviations.txt'
  for line in path.read_text().splitlines():
    line = line.strip()
    if line and not line.startswith('#'):
      yield line.lower().rstrip('.')


def paragraphs(text):
  return [p.strip() for p in re.split(r'\n[ \t\r]*\n', text) if p.strip()]


def main():
  params = PunktParameters()
  params.abbrev_types = set(abbreviations())
  punkt = PunktSentenceTokenizer(params)
  treebank = TreebankWordTokenizer()
  for text in STRINGS:
    sentences = punkt.tokenize(text)
    words = [w for s in sentences for w in treebank.tokenize(s)]
    entry = {'text': text, 'sentences': sentences, 'words': words,
             'paragraphs': paragraphs(text), 'overrides': {}}
    for field in ('sentences', 'words'):
      if (text, field) in OVERRIDES:
        expected, reason = OVERRIDES[(text, field)]
        entry[field] = expected
        entry['overrides'][field] = reason
    print(json.dumps(entry, ensure_ascii=False))


if __name__ == '__main__':
  main()
