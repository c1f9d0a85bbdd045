import logging

import pandas as pd
import pytest

from polyadica.utils import (
    as_int_list,
    decode_int,
    dump_records,
    encode_int,
    load_jsonl,
    parse_json_objects,
)

logging.disable(logging.INFO)


class TestIntegers:
    def test_encode(self):
        assert encode_int(12) == 12
        assert encode_int(-(2**60)) == str(-(2**60))
        with pytest.raises(TypeError):
            encode_int(1.5)

    def test_decode(self):
        assert decode_int(" 123456789012345678901234567890 ") == 123456789012345678901234567890
        assert as_int_list([1, "2", -3]) == [1, 2, -3]
        with pytest.raises(TypeError):
            decode_int(True)
        with pytest.raises(TypeError):
            decode_int(2.0)


class TestJsonl:
    def test_dump_and_load(self, tmp_path):
        path = str(tmp_path / "records.jsonl")
        dump_records(pd.DataFrame({"a": [1, 2], "b": ["x", "y"]}), path)
        assert load_jsonl(path) == [{"a": 1, "b": "x"}, {"a": 2, "b": "y"}]
        dump_records([{"c": 3}], path)
        assert load_jsonl(path) == [{"c": 3}]

    def test_dump_errors(self, tmp_path):
        with pytest.raises(ValueError):
            dump_records([{"c": 3}], str(tmp_path / "records.json"))
        with pytest.raises(TypeError):
            dump_records("records", str(tmp_path / "records.jsonl"))
        with pytest.raises(TypeError):
            dump_records([{"c": 3}], tmp_path / "records.jsonl")

    def test_parse(self):
        assert parse_json_objects('{"a": 1}') == [{"a": 1}]
        assert parse_json_objects('[{"a": 1}, {"a": 2}]') == [{"a": 1}, {"a": 2}]
        assert parse_json_objects('{"a": 1}\n\n{"a": 2}\n') == [{"a": 1}, {"a": 2}]
        assert parse_json_objects("  ") == []
