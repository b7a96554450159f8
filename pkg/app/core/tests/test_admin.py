"""
Test for the django admin modifications
"""
from django.test import TestCase
from django.contrib.auth import get_user_model
from django.urls import reverse
from django.test import Client

from core.models import VerificationRun
from core.verification import SuiteResult


class AdminSiteTests(TestCase):
    """ Test the admin site """

    def setUp(self):
        """ Create the admin user, the client and a recorded run """
        self.client = Client()
        self.admin_user = get_user_model().objects.create_superuser(
            username='admin',
            email='admin@example.com',
            password='password123'
        )
        self.client.force_login(self.admin_user)
        self.run = VerificationRun.record(SuiteResult(
            name='free-cumulants', passed=False, measured=3e-9,
            tolerance=1e-10, seed=7, elapsed=1.5,
        ))

    def test_runs_listed(self):
        """ Test that runs are listed on the run page """
        url = reverse('admin:core_verificationrun_changelist')
        res = self.client.get(url)

        self.assertContains(res, self.run.suite)

    def test_filter_by_outcome(self):
        url = reverse('admin:core_verificationrun_changelist')
        res = self.client.get(url, {'passed__exact': '1'})

        self.assertEqual(res.status_code, 200)
        self.assertEqual(res.context['cl'].result_count, 0)

    def test_run_detail_page(self):
        """ Test that the run page works """
        url = reverse('admin:core_verificationrun_change', args=[self.run.id])
        res = self.client.get(url)

        self.assertEqual(res.status_code, 200)
