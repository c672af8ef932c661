import pytest

from golden_cases import GOLDEN
from saek.errors import ExtractionFailed, OptionsNotFound, UnsupportedContraction
from saek.extract import Tense
from saek.lexicon import ArgumentCategory, QUESTION_CATEGORIES, COMMAND_CATEGORIES


def run(analyzer, classifier, extractor, text):
    u = analyzer.normalize(text)
    c = classifier.classify(u)
    return extractor.extract(u, c)


@pytest.mark.parametrize("text,label,arg,cat", GOLDEN)
def test_golden_arguments(analyzer, classifier, extractor, text, label, arg, cat):
    got = run(analyzer, classifier, extractor, text)
    assert got.text == arg
    assert got.category.value == cat
    assert int(got.source_label) == label


def test_adnominalize_paper_forms(extractor):
    assert extractor.adnominalize("왔", Tense.PAST) == "온"
    assert extractor.adnominalize("있", Tense.NONPAST) == "있는"
    assert extractor.adnominalize("막히", Tense.NONPAST) == "막히는"


def test_adnominalize_contraction_table(extractor):
    assert extractor.adnominalize("했", Tense.PAST) == "한"
    assert extractor.adnominalize("갔", Tense.PAST) == "간"
    assert extractor.adnominalize("봤", Tense.PAST) == "본"
    assert extractor.adnominalize("샀", Tense.PAST) == "산"
    assert extractor.adnominalize("탔", Tense.PAST) == "탄"
    assert extractor.adnominalize("섰", Tense.PAST) == "선"
    assert extractor.adnominalize("먹었", Tense.PAST) == "먹은"
    assert extractor.adnominalize("보냈", Tense.PAST) == "보낸"
    assert extractor.adnominalize("뒀", Tense.PAST) == "둔"


def test_adnominalize_unsupported_contraction(extractor):
    with pytest.raises(UnsupportedContraction):
        extractor.adnominalize("있", Tense.PAST)  # lexical ㅆ, not a tense mark


def test_adnominalize_rieul_drop(extractor):
    assert extractor.adnominalize("팔", Tense.NONPAST) == "파는"


def test_yesno_derived_nominalizer(analyzer, classifier, extractor):
    # stem + 는지 rule applied by hand over the morpheme tables
    got = run(analyzer, classifier, extractor, "밥 먹었어")
    assert got.text == "밥 먹었는지 여부"
    assert got.category is ArgumentCategory.WHETHER


def test_yesno_copula_uses_inji(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "그게 사실이야")
    assert got.text.endswith("인지 여부")


def test_yesno_empty_content_fails(analyzer, classifier, extractor):
    with pytest.raises(ExtractionFailed):
        run(analyzer, classifier, extractor, "궁금해")  # nothing but the cue
    with pytest.raises(ExtractionFailed):
        extractor.extract_yesno([])


def test_alternative_derived_template(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "짜장 먹을래 짬뽕 먹을래")
    assert got.text == "짜장 짬뽕 중 먹을 것"


def test_alternative_single_clause_fails(extractor, analyzer):
    u = analyzer.normalize("버스로 올거야")
    with pytest.raises(OptionsNotFound):
        extractor.extract_alternative(u.tokens)


def test_alternative_past_predicate(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "버스로 왔어 택시로 왔어")
    assert got.text == "버스 택시 중 온 것"


def test_wh_first_occurrence_wins(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "누가 어디 갔니")
    assert got.category is ArgumentCategory.PERSON
    assert got.text.endswith("사람")


def test_wh_info_seeking_embedded_question(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "지갑 어디 있는지 말해줘")
    assert got.text == "지갑 있는 위치"


def test_command_keeps_locative_particle(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "태풍 오니까 밖에 나가지 마")
    assert got.text == "밖에 나가지 않기"  # 에 kept, reason clause dropped


def test_command_requirement_nominalizers(analyzer, classifier, extractor):
    assert run(analyzer, classifier, extractor, "인적사항 확인 바랍니다").text == "인적사항 확인하기"
    assert run(analyzer, classifier, extractor, "손 씻어라").text == "손 씻기"
    assert run(analyzer, classifier, extractor, "천천히 운전해").text == "천천히 운전하기"


def test_command_requirement_drops_object_case_particle(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "창문을 열어줘")
    assert got.text == "창문 열어주기"


def test_sr_malgo_drops_whole_negated_clause(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "욕심부리지 말고 지금 팔아")
    pre_clause = {"욕심부리지", "말고"}
    assert not pre_clause & set(got.text.split())
    assert got.category is ArgumentCategory.REQUIREMENT


def test_malgo_drop_applies_to_every_route(analyzer, classifier, extractor):
    cases = [
        ("커피 말고 차 마실래", "차 마실지 여부", {"커피", "말고"}),
        ("그거 말고 이거 살까 저거 살까", "이거 저거 중 살 것", {"그거", "말고"}),
        ("이것 말고 저것 주세요", "저것 주기", {"이것", "말고"}),
    ]
    for text, want, banned in cases:
        got = run(analyzer, classifier, extractor, text)
        assert got.text == want
        assert not banned & set(got.text.split())


def test_contraction_fallback_flagged_in_notes(analyzer, classifier, extractor):
    # a nonsense coda-ㅆ syllable outside the contraction table: raw stem + 은
    got = run(analyzer, classifier, extractor, "누가 긨니")
    assert got.text == "긨은 사람"
    assert "contraction-fallback" in got.notes


def test_sr_double_negation_removes_negator(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "안전띠 안매면 큰일나")
    assert got.text == "안전띠 매기"
    got = run(analyzer, classifier, extractor, "약 안 먹으면 혼나")
    assert got.text == "약 먹기"


def test_category_agrees_with_supertype(analyzer, classifier, extractor):
    for text, label, _arg, _cat in GOLDEN:
        got = run(analyzer, classifier, extractor, text)
        if label <= 2:
            assert got.category in QUESTION_CATEGORIES
        else:
            assert got.category in COMMAND_CATEGORIES


def test_no_ending_leakage_on_golden(analyzer, classifier, extractor, lexicon):
    for text, *_ in GOLDEN:
        got = run(analyzer, classifier, extractor, text)
        assert not any(tok in lexicon.endings for tok in got.text.split())


def test_subject_pronoun_dropped(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "너 의료 봉사 신청 했어")
    assert "너" not in got.text.split()


def test_vocative_dropped(analyzer, classifier, extractor):
    got = run(analyzer, classifier, extractor, "어디 있니 로비야")
    assert "로비" not in got.text
