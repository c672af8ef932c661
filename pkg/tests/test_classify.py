import pytest

from golden_cases import GOLDEN
from saek.classify import (
    IntentLabel,
    Negativeness,
    QuestionType,
    negativeness,
    question_type,
)
from saek.errors import Unclassifiable, WrongSuperType


@pytest.mark.parametrize("text,label,_arg,_cat", GOLDEN)
def test_golden_labels(analyzer, classifier, text, label, _arg, _cat):
    got = classifier.classify(analyzer.normalize(text))
    assert int(got.label) == label


def test_statement_is_unclassifiable(analyzer, classifier):
    with pytest.raises(Unclassifiable):
        classifier.classify(analyzer.normalize("비가 온다"))
    with pytest.raises(Unclassifiable):
        classifier.classify(analyzer.normalize("노란 꽃"))


def test_wh_field_present_exactly_for_label_two(analyzer, classifier):
    for text, label, _arg, _cat in GOLDEN:
        got = classifier.classify(analyzer.normalize(text))
        assert (got.wh is not None) == (label == 2)


def test_info_seeking_imperative_rule_precedes_imperative(analyzer, classifier):
    got = classifier.classify(analyzer.normalize("이번 주 일정을 모두 말해"))
    assert got.label is IntentLabel.WH
    assert "info-seeking" in got.rules()


def test_info_seeking_without_wh_or_quantifier_is_polar(analyzer, classifier):
    got = classifier.classify(analyzer.normalize("어제 소식 말해줘"))
    assert got.label is IntentLabel.YES_NO


def test_info_seeking_with_wh_word(analyzer, classifier):
    got = classifier.classify(analyzer.normalize("지갑 어디 있는지 말해줘"))
    assert got.label is IntentLabel.WH
    assert got.wh.kind.value == "where"


def test_alternative_requires_parallel_or_disjunction(analyzer, classifier):
    got = classifier.classify(analyzer.normalize("버스 타 아니면 택시 탈래"))
    assert got.label is IntentLabel.ALTERNATIVE
    # a lone interrogative clause stays polar
    got = classifier.classify(analyzer.normalize("버스로 올거야"))
    assert got.label is IntentLabel.YES_NO


def test_double_negation_needs_all_three_cues(analyzer, classifier):
    sr = classifier.classify(analyzer.normalize("안전띠 안매면 큰일나"))
    assert sr.label is IntentLabel.STRONG_REQUIREMENT
    ph = classifier.classify(analyzer.normalize("안전띠 매면 큰일나"))
    assert ph.label is IntentLabel.PROHIBITION


def test_determinism_bit_for_bit(analyzer, classifier):
    for text, *_ in GOLDEN:
        u1, u2 = analyzer.normalize(text), analyzer.normalize(text)
        assert classifier.classify(u1) == classifier.classify(u2)


def test_evidence_spans_within_bounds(analyzer, classifier):
    for text, *_ in GOLDEN:
        u = analyzer.normalize(text)
        got = classifier.classify(u)
        for e in got.evidence:
            start, end = e.span
            assert 0 <= start <= end <= len(u.text)


def test_question_type_projection():
    assert question_type(IntentLabel.YES_NO) is QuestionType.YES_NO
    assert question_type(IntentLabel.ALTERNATIVE) is QuestionType.ALTERNATIVE
    assert question_type(IntentLabel.WH) is QuestionType.WH
    with pytest.raises(WrongSuperType):
        question_type(IntentLabel.PROHIBITION)


def test_negativeness_projection():
    assert negativeness(IntentLabel.PROHIBITION) is Negativeness.PH
    assert negativeness(IntentLabel.REQUIREMENT) is Negativeness.REQ
    assert negativeness(IntentLabel.STRONG_REQUIREMENT) is Negativeness.SR
    with pytest.raises(WrongSuperType):
        negativeness(IntentLabel.YES_NO)


def test_label_encoding_matches_dataset_order():
    assert [int(l) for l in IntentLabel] == [0, 1, 2, 3, 4, 5]
    assert IntentLabel.YES_NO == 0 and IntentLabel.STRONG_REQUIREMENT == 5
