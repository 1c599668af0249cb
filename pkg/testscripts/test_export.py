import json

import wordram.export as export
from wordram.model_data_classes import Strategy, SweepRow



def _row (B, strategy=Strategy.QUERY_HEAVY, correct=True):
	return SweepRow(B=B, strategy=strategy, Tu_max=4, Tq_max=7, Tu_mean=4.0, Tq_mean=3.5, correct=correct)


def test_json_sorted_and_enum_values ():
	text = export.formatReport(_row(16), 'json')
	data = json.loads(text)
	assert data['strategy'] == 'query-heavy'
	assert list(data) == sorted(data)
	assert text == export.reportToJSON(_row(16))


def test_csv_uses_given_columns ():
	rows = [_row(2), _row(4, Strategy.UPDATE_HEAVY, False)]
	text = export.formatReport(rows, 'csv', export.SWEEP_FIELDS)
	assert text.splitlines() == [
		'B,strategy,Tu_max,Tq_max,correct',
		'2,query-heavy,4,7,True',
		'4,update-heavy,4,7,False',
	]
	assert not text.endswith('\n')


def test_csv_defaults_to_scalar_fields ():
	text = export.formatReport(_row(8), 'csv')
	header = text.splitlines()[0].split(',')
	assert header == export.scalarFields(_row(8))
	assert 'Tq_mean' in header


def test_write_report_makes_folders (tmp_path):
	target = tmp_path / 'nested' / 'deeper' / 'rows.csv'
	export.writeReport('a,b', str(target))
	assert target.read_text() == 'a,b\n'
