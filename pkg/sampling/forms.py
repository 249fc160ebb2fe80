from django import forms


class SbmConfigForm(forms.Form):
    cluster_count = forms.IntegerField(min_value=1)
    size_success_prob = forms.FloatField(max_value=1.0)
    intra_prob = forms.FloatField(min_value=0.0, max_value=1.0)
    inter_prob = forms.FloatField(min_value=0.0, max_value=1.0)
    max_regen_attempts = forms.IntegerField(min_value=1)
    repair = forms.BooleanField(required=False)
    cluster_sizes = forms.JSONField(required=False)

    def clean_size_success_prob(self):
        value = self.cleaned_data['size_success_prob']
        if value <= 0:
            raise forms.ValidationError("Must lie in (0, 1].")
        return value

    def clean_cluster_sizes(self):
        sizes = self.cleaned_data['cluster_sizes']
        if sizes is None:
            return None
        if not isinstance(sizes, list) or not sizes or not all(isinstance(s, int) and s >= 1 for s in sizes):
            raise forms.ValidationError("Must be a non-empty list of positive integers.")
        return tuple(sizes)

    def clean(self):
        cleaned = super().clean()
        intra, inter = cleaned.get('intra_prob'), cleaned.get('inter_prob')
        if intra is not None and inter is not None and inter > intra:
            raise forms.ValidationError("inter_prob must not exceed intra_prob.")
        return cleaned


class TrainerConfigForm(forms.Form):
    horizon = forms.IntegerField(min_value=1)
    learn_rate = forms.FloatField()
    batch_size = forms.IntegerField(min_value=1)
    episodes = forms.IntegerField(min_value=0)
    rmsprop_decay = forms.FloatField()
    rmsprop_eps = forms.FloatField()
    early_stop_threshold = forms.FloatField(required=False, min_value=0.0)
    early_stop_window = forms.IntegerField(min_value=1)

    def clean_learn_rate(self):
        value = self.cleaned_data['learn_rate']
        if value <= 0:
            raise forms.ValidationError("Must be positive.")
        return value

    def clean_rmsprop_decay(self):
        value = self.cleaned_data['rmsprop_decay']
        if not 0 < value < 1:
            raise forms.ValidationError("Must lie in (0, 1).")
        return value

    def clean_rmsprop_eps(self):
        value = self.cleaned_data['rmsprop_eps']
        if value <= 0:
            raise forms.ValidationError("Must be positive.")
        return value


class SolverConfigForm(forms.Form):
    max_iters = forms.IntegerField(min_value=1)
    rel_tol = forms.FloatField()
    tau = forms.FloatField(required=False)
    sigma = forms.FloatField(required=False)

    def clean(self):
        cleaned = super().clean()
        for name in ('rel_tol', 'tau', 'sigma'):
            value = cleaned.get(name)
            if value is not None and value <= 0:
                self.add_error(name, "Must be positive.")
        return cleaned


class ExperimentConfigForm(forms.Form):
    train_graphs = forms.IntegerField(min_value=1)
    test_graphs = forms.IntegerField(min_value=1)
    budgets = forms.JSONField()
    train_budget = forms.FloatField(max_value=1.0)
    # stored in a PositiveBigIntegerField, a signed 64-bit column
    master_seed = forms.IntegerField(min_value=0, max_value=2**63 - 1)
    output_dir = forms.CharField()
    workers = forms.IntegerField(min_value=1)
    db_floor = forms.FloatField(max_value=0.0)
    baseline_trials = forms.IntegerField(min_value=0)

    def clean_budgets(self):
        budgets = self.cleaned_data['budgets']
        if not isinstance(budgets, list) or not budgets:
            raise forms.ValidationError("Must be a non-empty list of relative budgets.")
        if not all(isinstance(b, (int, float)) and not isinstance(b, bool) and 0 < b <= 1 for b in budgets):
            raise forms.ValidationError("Every budget must lie in (0, 1].")
        return tuple(float(b) for b in budgets)

    def clean_train_budget(self):
        value = self.cleaned_data['train_budget']
        if value <= 0:
            raise forms.ValidationError("Must lie in (0, 1].")
        return value
