from typing import Union

from oblivagg.data_models.api import (
    AnyUserKey,
    DropoutTolerantUserKey,
    NoDropoutUserKey,
    SourceKey,
    SummationUserKey,
    to_list,
)


def test_to_list_should_expand_union():
    assert set(to_list(AnyUserKey)) == {
        NoDropoutUserKey,
        DropoutTolerantUserKey,
        SummationUserKey,
    }


def test_to_list_should_wrap_single_model():
    assert to_list(SourceKey) == [SourceKey]
    assert set(to_list(Union[SourceKey, NoDropoutUserKey])) == {SourceKey, NoDropoutUserKey}
