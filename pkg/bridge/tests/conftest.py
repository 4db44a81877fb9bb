import pytest

from recourse_bridge import TabularModel, toy_loan_dataset


@pytest.fixture(scope="session")
def dataset():
    return toy_loan_dataset(seed=0)


@pytest.fixture(scope="session")
def model(dataset):
    return TabularModel(dataset).fit()


@pytest.fixture(scope="session")
def rejected_index(model, dataset):
    for index, row in enumerate(dataset.rows):
        if not model.predicts_desired(dict(row)):
            return index
    raise AssertionError("toy dataset has no rejected rows")


@pytest.fixture(scope="session")
def accepted_index(model, dataset):
    for index, row in enumerate(dataset.rows):
        if model.predicts_desired(dict(row)):
            return index
    raise AssertionError("toy dataset has no accepted rows")
