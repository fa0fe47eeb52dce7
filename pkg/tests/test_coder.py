"""Tests for tokenization, sound classes and position-string coding."""

import pytest

from shared.schemas import CodingVariant, SoundClass, SoundKind
from versevar.coding import (
    Lexicon,
    auto_code_line,
    code_poem,
    initial_sound_class,
    load_lexicon,
    parse_annotated_line,
    parse_meter_pattern,
    render_annotated,
    tokenize,
)
from versevar.coding.lexicon import parse_lexicon
from versevar.corpus import load_fixture
from versevar.errors import CodingError, ParseError, PatternError, SoundClassError

LINE_1 = "In a somer seson / whan softe was the sonne ,"
LINE_6 = "Me bifel a ferly / of Fairye me thoghte."


@pytest.fixture
def figure1_lines() -> list[str]:
    return load_fixture("figure1_lines").payload


@pytest.fixture
def lexicon() -> Lexicon:
    return load_lexicon()


class TestTokenize:
    """Tests for tokenize."""

    def test_caesura_and_words(self):
        tokens = tokenize(LINE_1)

        assert len(tokens) == 10
        assert sum(t.is_caesura for t in tokens) == 1
        assert tokens[4].surface == "/"
        assert [t.normalized for t in tokens if not t.is_caesura][-1] == "sonne"

    def test_punctuation_stripped(self):
        tokens = tokenize("Of alderes, of armes, of oþer auenturus.")

        assert [t.surface for t in tokens] == ["Of", "alderes", "of", "armes", "of", "oþer", "auenturus"]
        assert tokens[0].normalized == "of"

    def test_empty(self):
        assert tokenize("") == []
        assert tokenize("  , ; ") == []


class TestInitialSoundClass:
    """Tests for initial_sound_class."""

    @pytest.mark.parametrize(
        ("word", "kind"),
        [
            ("cat", SoundKind.K),
            ("king", SoundKind.K),
            ("quit", SoundKind.K),
            ("knight", SoundKind.K),
            ("cent", SoundKind.S),
            ("ciao", SoundKind.S),
            ("shoop", SoundKind.SH),
            ("schip", SoundKind.SH),
            ("somer", SoundKind.S),
            ("alderes", SoundKind.VOWEL),
            ("oþer", SoundKind.VOWEL),
            ("unholy", SoundKind.VOWEL),
            ("gold", SoundKind.G_HARD),
            ("gret", SoundKind.G_HARD),
            ("gentil", SoundKind.J_SOFT_G),
            ("ȝe", SoundKind.J_SOFT_G),
            ("ȝard", SoundKind.G_HARD),
            ("iape", SoundKind.J_SOFT_G),
            ("thoghte", SoundKind.TH),
            ("þat", SoundKind.TH),
            ("tale", SoundKind.T),
            ("phisik", SoundKind.F),
            ("vertu", SoundKind.V),
            ("whan", SoundKind.W),
            ("wryten", SoundKind.W),
            ("yeer", SoundKind.Y),
            ("ynne", SoundKind.VOWEL),
            ("hilles", SoundKind.H),
        ],
    )
    def test_classes(self, word, kind):
        assert initial_sound_class(word).kind == kind

    def test_cluster(self):
        assert initial_sound_class("chaunce") == SoundClass(kind=SoundKind.CLUSTER, letters="ch")

    def test_sh_distinct_from_s(self):
        assert initial_sound_class("shroudes") != initial_sound_class("seson")

    def test_diacritics_ignored(self):
        assert initial_sound_class("émeraude").kind == SoundKind.VOWEL

    @pytest.mark.parametrize("ezh, yogh", [("ʒe", "ȝe"), ("ʒard", "ȝard"), ("ʒif", "ȝif")])
    def test_ezh_reads_as_yogh(self, ezh, yogh):
        assert initial_sound_class(ezh) == initial_sound_class(yogh)

    def test_unclassifiable(self):
        with pytest.raises(SoundClassError, match="'1'"):
            initial_sound_class("1st")

    def test_empty(self):
        with pytest.raises(ValueError):
            initial_sound_class("")


class TestAutoCodeLine:
    """Tests for auto_code_line."""

    def test_variant_a_reproduces_published_codes(self, figure1_lines, lexicon):
        expected = load_fixture("figure1_codes_variant_a").payload

        codes = [auto_code_line(tokenize(line), CodingVariant.A, lexicon).bits for line in figure1_lines]
        assert codes == expected

    def test_variant_b_reproduces_published_codes(self, figure1_lines, lexicon):
        expected = load_fixture("figure1_codes_variant_b").payload

        codes = [auto_code_line(tokenize(line), CodingVariant.B, lexicon).bits for line in figure1_lines]
        assert codes == expected

    def test_prefix_marks_bifel(self, lexicon):
        assert auto_code_line(tokenize(LINE_6), CodingVariant.B, lexicon).bits == "01010100"
        assert auto_code_line(tokenize(LINE_6), CodingVariant.A, lexicon).bits == "00010100"

    def test_without_prefixes(self, lexicon):
        bare = Lexicon(stopwords=lexicon.stopwords, prefixes=())

        assert auto_code_line(tokenize(LINE_6), CodingVariant.B, bare).bits == "00010100"

    def test_a_verse_stave_limit(self, lexicon):
        tokens = tokenize("Wente wide in this world / wondres to here.")

        assert auto_code_line(tokens, CodingVariant.B, lexicon).bits == "01001100"
        assert auto_code_line(tokens, CodingVariant.B, lexicon, a_verse_max_staves=None).bits == "11001100"

    def test_vowel_line(self, lexicon):
        tokens = tokenize("Of alderes, of armes, of oþer auenturus.")

        assert auto_code_line(tokens, CodingVariant.A, lexicon).bits == "1111111"

    def test_length_matches_words(self, figure1_lines, lexicon):
        for line in figure1_lines:
            tokens = tokenize(line)
            for variant in CodingVariant:
                bits = auto_code_line(tokens, variant, lexicon)
                assert len(bits) == sum(not t.is_caesura for t in tokens)

    def test_function_words_only(self):
        lexicon = Lexicon(stopwords=frozenset({"of", "the"}), prefixes=())

        assert auto_code_line(tokenize("of the"), CodingVariant.A, lexicon).bits == "10"
        assert auto_code_line(tokenize("of the"), CodingVariant.B, lexicon).bits == "00"

    def test_no_words(self, lexicon):
        with pytest.raises(CodingError):
            auto_code_line(tokenize(" / "), CodingVariant.A, lexicon)


class TestAnnotatedLines:
    """Tests for parse_annotated_line and render_annotated."""

    def test_marks(self):
        line = parse_annotated_line("In a *somer* *seson* / whan *softe* was the *sonne*")

        assert line.position_string.bits == "001101001"
        assert sum(t.is_caesura for t in line.tokens) == 1

    def test_single_marked_word(self):
        line = parse_annotated_line("*a*")

        assert [t.surface for t in line.tokens] == ["a"]
        assert line.marks == [True]

    def test_unmarked(self):
        assert parse_annotated_line("a b c").position_string.bits == "000"

    def test_punctuation_outside_marks(self):
        line = parse_annotated_line("by a *bourne* *syde*;")

        assert line.position_string.bits == "0011"
        assert line.tokens[-1].surface == "syde"

    @pytest.mark.parametrize(
        ("text", "column"),
        [
            ("In a *somer seson", 6),
            ("In a somer* seson", 11),
            ("a ** b", 3),
            ("so*m*er", 3),
        ],
    )
    def test_unbalanced(self, text, column):
        with pytest.raises(ParseError) as excinfo:
            parse_annotated_line(text, line_number=4)

        assert excinfo.value.column == column
        assert excinfo.value.line == 4

    def test_render_round_trip(self):
        text = "In a *somer* *seson* / whan *softe* was the *sonne*"

        assert render_annotated(parse_annotated_line(text)) == text


class TestMeterPattern:
    """Tests for parse_meter_pattern."""

    @pytest.mark.parametrize("text", ["aa/ax", "aaa/xx", "xx/xx", "ab/ba"])
    def test_valid(self, text):
        assert parse_meter_pattern(text).text == text

    @pytest.mark.parametrize("text", ["aa//ax", "aa/ay", "aaax", "aa/", ""])
    def test_invalid(self, text):
        with pytest.raises(PatternError):
            parse_meter_pattern(text)


class TestCodePoem:
    """Tests for code_poem."""

    def test_annotated_lines_pass_through(self, lexicon):
        lines = ["*In* a somer seson", "*Me* *bifel* a ferly / of *Fairye* me thoghte."]

        codes = code_poem(lines, CodingVariant.B, lexicon)
        assert [c.bits for c in codes] == ["1000", "11000100"]

    def test_unmarked_line_in_annotated_poem(self, lexicon):
        lines = [
            "In a *somer* *seson* / whan *softe* was the *sonne*",
            "Wente wide in this world / wondres to here",
        ]

        codes = code_poem(lines, CodingVariant.A, lexicon)
        assert [c.bits for c in codes] == ["001101001", "00000000"]

    def test_forced_auto_ignores_marks(self, lexicon):
        plain = code_poem(["Me bifel a ferly / of Fairye me thoghte."], CodingVariant.B, lexicon)
        forced = code_poem(
            ["*Me* bifel a ferly / of Fairye me thoghte."], CodingVariant.B, lexicon, annotated=False
        )

        assert [c.bits for c in plain] == ["01010100"]
        assert forced == plain

    def test_forced_annotated_without_marks(self, lexicon):
        codes = code_poem(["Wente wide in this world"], CodingVariant.A, lexicon, annotated=True)

        assert [c.bits for c in codes] == ["00000"]

    def test_reports_line_of_bad_input(self, lexicon):
        with pytest.raises(CodingError, match="line 2"):
            code_poem(["a b", "/"], CodingVariant.A, lexicon)

    def test_reports_line_of_unclassifiable_word(self, lexicon):
        with pytest.raises(CodingError, match="line 3"):
            code_poem(["a b", "c d", "bred & ale"], CodingVariant.A, lexicon)


class TestLexicon:
    """Tests for lexicon loading."""

    def test_parse_skips_comments(self):
        assert parse_lexicon("# header\nThe\n\nof  # preposition\n") == ["the", "of"]

    def test_shipped_prefixes(self, lexicon):
        assert set(lexicon.prefixes) == {"bi", "for", "a", "un", "y", "to"}
        assert lexicon.prefixes[0] == "for"

    def test_shipped_stopwords(self, lexicon):
        assert {"the", "and", "of", "was", "so"} <= lexicon.stopwords
        assert "may" not in lexicon.stopwords
